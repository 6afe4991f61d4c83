#pragma once

#include <cstdint>
#include <vector>

namespace gfdn {

/// Partition of the delay lines into groups. Every group holds the same
/// number of lines, so the full delay vector is the concatenation of G
/// blocks of N' lengths each.
struct GroupTopology {
    int num_groups = 1;                 // G
    int delays_per_group = 1;           // N'
    std::vector<int> delay_lengths;     // m, length G*N', samples

    int total_delays() const { return num_groups * delays_per_group; }
    int group_of(int line) const { return line / delays_per_group; }

    /// Sum of all delay lengths (the state dimension of the network).
    long total_delay_samples() const;

    /// Throws std::invalid_argument if the partition or lengths are invalid
    /// (empty groups, lengths < 1, size mismatch, non-coprime lengths).
    void validate() const;
};

/// True if every pair of lengths is coprime.
bool pairwise_coprime(const std::vector<int>& lengths);

/// Draws `count` pairwise-coprime delay lengths from [lo, hi], seeded for
/// reproducibility. Throws if the range cannot supply enough coprime values.
std::vector<int> coprime_delays(int count, int lo, int hi, std::uint64_t seed);

/// Default delay lengths for a network at sample rate fs: `count` coprime
/// values between 20 ms and 50 ms.
std::vector<int> default_delays(int count, double fs, std::uint64_t seed);

GroupTopology make_topology(int num_groups, int delays_per_group,
                            const std::vector<int>& delay_lengths);

} // namespace gfdn
