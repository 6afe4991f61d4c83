#pragma once

#include "gfdn/feedback.hpp"
#include "gfdn/topology.hpp"

#include <string>
#include <vector>

namespace gfdn {

/// Per-delay absorption gain realizing a target T60: a signal circulating
/// once through a line of delay_m samples is attenuated so that energy
/// decays 60 dB after t60 seconds. Returns exp(-6.91 * delay_m / (fs * t60)).
double t60_to_absorption_gain(double t60, double delay_m, double fs);

/// Same quantity in dB: -60 * delay_m / (fs * t60).
double t60_to_absorption_gain_db(double t60, double delay_m, double fs);

/// Complete parameter set of one frequency-independent network.
///
/// absorption_gains holds one per-sample gain per group; the attenuation
/// actually applied to delay line i is absorption_gains[k]^m_i for the
/// line's group k, lumped once per traversal.
struct GFDNParams {
    GroupTopology topology;
    FeedbackMatrix feedback;
    std::vector<double> input_gains;      // b, length N
    std::vector<double> output_gains;     // c, length N
    std::vector<double> absorption_gains; // gamma_k per group, per-sample
    std::vector<double> source_gains;     // g_i per group
    std::vector<double> receiver_gains;   // g_o per group
    double direct_gain = 0.0;             // d

    /// Lumped per-line attenuation gamma_k^{m_i}.
    double line_attenuation(int line) const;

    /// Input/output tap including group source/receiver gains:
    /// b_i * g_{i,k(i)} and c_i * g_{o,k(i)}.
    double input_tap(int line) const;
    double output_tap(int line) const;

    void validate() const;
};

/// One network per octave band; all bands share the topology and differ
/// only in gains and feedback.
struct SubbandNetworkBank {
    double sample_rate = 0.0;
    std::vector<double> center_freqs; // Hz, octave ladder
    std::vector<GFDNParams> networks; // one per band

    int num_bands() const { return static_cast<int>(networks.size()); }
    void validate() const;
};

/// Builds a params object with unit source/receiver gains and absorption
/// derived from per-group T60s.
GFDNParams make_params(const GroupTopology& topology, const FeedbackMatrix& feedback,
                       const std::vector<double>& input_gains,
                       const std::vector<double>& output_gains,
                       const std::vector<double>& t60_per_group, double fs);

/// Versioned JSON round trip (matrices row-major).
std::string params_to_json(const GFDNParams& p);
GFDNParams params_from_json(const std::string& text);

std::string bank_to_json(const SubbandNetworkBank& bank);
SubbandNetworkBank bank_from_json(const std::string& text);

} // namespace gfdn
