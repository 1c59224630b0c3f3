#include "rirforge/audio_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "rirforge/errors.hpp"

namespace rirforge {

namespace {

std::uint32_t rd_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}
std::uint16_t rd_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}
void wr_u32(std::ofstream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xFF),
                          static_cast<unsigned char>((v >> 8) & 0xFF),
                          static_cast<unsigned char>((v >> 16) & 0xFF),
                          static_cast<unsigned char>((v >> 24) & 0xFF)};
    out.write(reinterpret_cast<const char*>(b), 4);
}
void wr_u16(std::ofstream& out, std::uint16_t v) {
    unsigned char b[2] = {static_cast<unsigned char>(v & 0xFF),
                          static_cast<unsigned char>((v >> 8) & 0xFF)};
    out.write(reinterpret_cast<const char*>(b), 2);
}

}  // namespace

AudioBuffer read_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open wav file: " + path);
    std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (data.size() < 44 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
        std::memcmp(data.data() + 8, "WAVE", 4) != 0)
        throw FormatError("not a RIFF/WAVE file: " + path);

    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    const unsigned char* pcm = nullptr;
    std::size_t pcm_bytes = 0;

    std::size_t pos = 12;
    while (pos + 8 <= data.size()) {
        const std::uint32_t chunk_size = rd_u32(data.data() + pos + 4);
        const unsigned char* body = data.data() + pos + 8;
        if (pos + 8 + chunk_size > data.size())
            throw FormatError("truncated wav chunk in " + path);
        if (std::memcmp(data.data() + pos, "fmt ", 4) == 0) {
            if (chunk_size < 16) throw FormatError("short fmt chunk in " + path);
            format = rd_u16(body);
            channels = rd_u16(body + 2);
            rate = rd_u32(body + 4);
            bits = rd_u16(body + 14);
            if (format == 0xFFFE && chunk_size >= 40)  // WAVE_FORMAT_EXTENSIBLE
                format = rd_u16(body + 24);
        } else if (std::memcmp(data.data() + pos, "data", 4) == 0) {
            pcm = body;
            pcm_bytes = chunk_size;
        }
        pos += 8 + chunk_size + (chunk_size & 1);
    }
    if (!pcm || channels == 0 || rate == 0)
        throw FormatError("missing fmt/data chunk in " + path);

    const std::size_t bytes_per_sample = bits / 8;
    if (bytes_per_sample == 0) throw FormatError("bad bit depth in " + path);
    const std::size_t frame_bytes = bytes_per_sample * channels;
    const std::size_t frames = pcm_bytes / frame_bytes;

    AudioBuffer buf;
    buf.sample_rate_hz = static_cast<int>(rate);
    buf.samples.resize(frames);

    for (std::size_t i = 0; i < frames; ++i) {
        const unsigned char* s = pcm + i * frame_bytes;  // first channel
        double v = 0.0;
        if (format == 1 && bits == 16) {
            std::int16_t raw;
            std::memcpy(&raw, s, 2);
            v = raw / 32768.0;
        } else if (format == 1 && bits == 24) {
            std::int32_t raw = (s[0] << 8) | (s[1] << 16) |
                               (static_cast<std::int32_t>(static_cast<std::int8_t>(s[2])) << 24);
            v = (raw >> 8) / 8388608.0;
        } else if (format == 1 && bits == 32) {
            std::int32_t raw;
            std::memcpy(&raw, s, 4);
            v = raw / 2147483648.0;
        } else if (format == 3 && bits == 32) {
            float raw;
            std::memcpy(&raw, s, 4);
            v = raw;
        } else if (format == 3 && bits == 64) {
            double raw;
            std::memcpy(&raw, s, 8);
            v = raw;
        } else {
            throw FormatError("unsupported wav encoding (format " + std::to_string(format) +
                              ", " + std::to_string(bits) + " bit) in " + path);
        }
        buf.samples[i] = v;
    }
    return buf;
}

void write_wav_float32(const std::string& path, std::span<const double> samples,
                       int sample_rate_hz) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    const std::uint32_t data_bytes = static_cast<std::uint32_t>(samples.size() * 4);

    out.write("RIFF", 4);
    wr_u32(out, 36 + data_bytes);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    wr_u32(out, 16);
    wr_u16(out, 3);  // IEEE float
    wr_u16(out, 1);
    wr_u32(out, static_cast<std::uint32_t>(sample_rate_hz));
    wr_u32(out, static_cast<std::uint32_t>(sample_rate_hz) * 4);
    wr_u16(out, 4);
    wr_u16(out, 32);
    out.write("data", 4);
    wr_u32(out, data_bytes);
    for (double v : samples) {
        const float f = static_cast<float>(v);
        char b[4];
        std::memcpy(b, &f, 4);
        out.write(b, 4);
    }
    if (!out) throw IoError("short write: " + path);
}

}  // namespace rirforge
