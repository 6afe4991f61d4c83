#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gfdn {

struct WavData {
    int sample_rate = 0;
    std::vector<float> samples; // mono
};

/// Writes a mono 32-bit float WAV file. Throws std::runtime_error on I/O failure.
void write_wav(const std::string& path, const std::vector<float>& samples, int sample_rate);
void write_wav(const std::string& path, const std::vector<double>& samples, int sample_rate);

/// Reads a mono WAV file. Accepts 32-bit float (format 3) and 16-bit PCM
/// (format 1); anything else is rejected. Multichannel input is rejected.
WavData read_wav(const std::string& path);

} // namespace gfdn
