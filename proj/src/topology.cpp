#include "gfdn/topology.hpp"

#include "gfdn/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gfdn {

long GroupTopology::total_delay_samples() const {
    long s = 0;
    for (int m : delay_lengths) s += m;
    return s;
}

void GroupTopology::validate() const {
    if (num_groups < 1) throw std::invalid_argument("topology: num_groups must be >= 1");
    if (delays_per_group < 1)
        throw std::invalid_argument("topology: delays_per_group must be >= 1");
    if (static_cast<int>(delay_lengths.size()) != total_delays())
        throw std::invalid_argument("topology: expected " + std::to_string(total_delays()) +
                                    " delay lengths, got " +
                                    std::to_string(delay_lengths.size()));
    for (int m : delay_lengths)
        if (m < 1) throw std::invalid_argument("topology: delay lengths must be >= 1");
    if (!pairwise_coprime(delay_lengths))
        throw std::invalid_argument("topology: delay lengths must be pairwise coprime");
}

bool pairwise_coprime(const std::vector<int>& lengths) {
    for (std::size_t i = 0; i < lengths.size(); ++i)
        for (std::size_t j = i + 1; j < lengths.size(); ++j)
            if (std::gcd(lengths[i], lengths[j]) != 1) return false;
    return true;
}

std::vector<int> coprime_delays(int count, int lo, int hi, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("coprime_delays: count must be >= 1");
    if (lo < 1 || hi < lo) throw std::invalid_argument("coprime_delays: bad range");

    Rng rng(seed);
    std::vector<int> chosen;
    chosen.reserve(count);
    const int span = hi - lo + 1;
    int attempts = 0;
    const int max_attempts = 1000 * count * std::max(1, span);
    while (static_cast<int>(chosen.size()) < count) {
        if (++attempts > max_attempts)
            throw std::invalid_argument("coprime_delays: range [" + std::to_string(lo) + ", " +
                                        std::to_string(hi) + "] cannot supply " +
                                        std::to_string(count) + " coprime lengths");
        const int cand = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
        bool ok = true;
        for (int m : chosen)
            if (std::gcd(cand, m) != 1) { ok = false; break; }
        if (ok) chosen.push_back(cand);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

std::vector<int> default_delays(int count, double fs, std::uint64_t seed) {
    const int lo = static_cast<int>(0.02 * fs);
    const int hi = static_cast<int>(0.05 * fs);
    return coprime_delays(count, lo, hi, seed);
}

GroupTopology make_topology(int num_groups, int delays_per_group,
                            const std::vector<int>& delay_lengths) {
    GroupTopology t;
    t.num_groups = num_groups;
    t.delays_per_group = delays_per_group;
    t.delay_lengths = delay_lengths;
    t.validate();
    return t;
}

} // namespace gfdn
