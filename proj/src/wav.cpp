#include "gfdn/wav.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace gfdn {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) {
    out.insert(out.end(), tag, tag + 4);
}

std::uint32_t get_u32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t get_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

} // namespace

void write_wav(const std::string& path, const std::vector<float>& samples, int sample_rate) {
    if (sample_rate <= 0) throw std::runtime_error("write_wav: non-positive sample rate");
    const std::uint32_t data_bytes = static_cast<std::uint32_t>(samples.size() * 4);

    std::vector<std::uint8_t> buf;
    buf.reserve(58 + data_bytes);
    put_tag(buf, "RIFF");
    put_u32(buf, 4 + 26 + 12 + 8 + data_bytes);
    put_tag(buf, "WAVE");
    // fmt chunk, WAVE_FORMAT_IEEE_FLOAT
    put_tag(buf, "fmt ");
    put_u32(buf, 18);
    put_u16(buf, 3);
    put_u16(buf, 1); // mono
    put_u32(buf, static_cast<std::uint32_t>(sample_rate));
    put_u32(buf, static_cast<std::uint32_t>(sample_rate) * 4);
    put_u16(buf, 4);
    put_u16(buf, 32);
    put_u16(buf, 0); // cbSize
    // fact chunk (required for non-PCM)
    put_tag(buf, "fact");
    put_u32(buf, 4);
    put_u32(buf, static_cast<std::uint32_t>(samples.size()));
    // data chunk
    put_tag(buf, "data");
    put_u32(buf, data_bytes);
    const std::size_t head = buf.size();
    buf.resize(head + data_bytes);
    static_assert(sizeof(float) == 4);
    std::memcpy(buf.data() + head, samples.data(), data_bytes);

    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_wav: cannot open " + path);
    f.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!f) throw std::runtime_error("write_wav: write failed for " + path);
}

void write_wav(const std::string& path, const std::vector<double>& samples, int sample_rate) {
    std::vector<float> f(samples.begin(), samples.end());
    write_wav(path, f, sample_rate);
}

WavData read_wav(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("read_wav: cannot open " + path);
    std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
    if (buf.size() < 12 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
        std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
        throw std::runtime_error("read_wav: not a RIFF/WAVE file: " + path);

    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    const std::uint8_t* data = nullptr;
    std::uint32_t data_len = 0;

    std::size_t pos = 12;
    while (pos + 8 <= buf.size()) {
        const std::uint8_t* chunk = buf.data() + pos;
        const std::uint32_t len = get_u32(chunk + 4);
        const std::uint8_t* body = chunk + 8;
        if (pos + 8 + len > buf.size())
            throw std::runtime_error("read_wav: truncated chunk in " + path);
        if (std::memcmp(chunk, "fmt ", 4) == 0 && len >= 16) {
            format = get_u16(body);
            channels = get_u16(body + 2);
            rate = get_u32(body + 4);
            bits = get_u16(body + 14);
        } else if (std::memcmp(chunk, "data", 4) == 0) {
            data = body;
            data_len = len;
        }
        pos += 8 + len + (len & 1); // chunks are word-aligned
    }
    if (!data) throw std::runtime_error("read_wav: no data chunk in " + path);
    if (channels != 1)
        throw std::runtime_error("read_wav: expected mono, got " + std::to_string(channels) +
                                 " channels in " + path);

    WavData out;
    out.sample_rate = static_cast<int>(rate);
    if (format == 3 && bits == 32) {
        out.samples.resize(data_len / 4);
        std::memcpy(out.samples.data(), data, out.samples.size() * 4);
    } else if (format == 1 && bits == 16) {
        const std::size_t n = data_len / 2;
        out.samples.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::int16_t s =
                static_cast<std::int16_t>(get_u16(data + 2 * i));
            out.samples[i] = static_cast<float>(s) / 32768.0f;
        }
    } else {
        throw std::runtime_error("read_wav: unsupported format (want float32 or pcm16): " + path);
    }
    return out;
}

} // namespace gfdn
