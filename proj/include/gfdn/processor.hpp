#pragma once

#include "gfdn/params.hpp"

#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace gfdn {

/// Time-domain recursion for one network.
///
/// Per sample: read the delay outputs, apply the lumped per-line
/// attenuation, mix through the feedback matrix back into the delay
/// inputs together with the injected input, and tap the output after
/// attenuation. This ordering realizes
///   H(z) = c^T (D_m^{-1}(z) Gamma^{-1} - A)^{-1} b + d
/// with the attenuation in series with each delay.
///
/// An instance is single-threaded on the audio side; a control thread may
/// publish new source/receiver gains at any time and they take effect
/// atomically at the next block boundary.
class Processor {
public:
    explicit Processor(const GFDNParams& params);

    /// Processes one block. input and output may alias. Adopts any pending
    /// position-gain update before the first sample of the block.
    void process_block(std::span<const double> input, std::span<double> output);

    std::vector<double> process(const std::vector<double>& input, std::size_t block_size = 256);

    /// Impulse response of the current configuration, length samples.
    std::vector<double> impulse_response(std::size_t length, std::size_t block_size = 256);

    /// Publishes a complete source/receiver gain set (length G each); the
    /// audio thread adopts it at the next block boundary. Never applies a
    /// partial update.
    void update_position_gains(const std::vector<double>& source_gains,
                               const std::vector<double>& receiver_gains);

    void reset_state();

    const GFDNParams& params() const { return params_; }

private:
    void adopt_pending_gains();

    GFDNParams params_;
    std::vector<double> attenuation_; // gamma_k^{m_i} per line
    std::vector<double> input_taps_;  // b_i * g_{i,k(i)}
    std::vector<double> output_taps_; // c_i * g_{o,k(i)}
    std::vector<std::vector<double>> buffers_;
    std::vector<std::size_t> write_pos_;

    std::mutex pending_mutex_;
    std::optional<std::pair<std::vector<double>, std::vector<double>>> pending_gains_;
};

/// Renders an impulse response through a subband bank: impulse -> filter
/// bank split -> per-band recursion -> sum. Bands run independently, so
/// the loop is parallel when OpenMP is enabled.
class OctaveBank; // filterbank.hpp
std::vector<double> render_subband_rir(const SubbandNetworkBank& bank, const OctaveBank& filters,
                                       std::size_t length);

} // namespace gfdn
