#include "gfdn/processor.hpp"

#include "gfdn/filterbank.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gfdn {

namespace {
// Feedback state below this is flushed to zero; keeps denormals out of the
// recursion on hosts without FTZ.
constexpr double kDenormalFloor = 1e-30;

inline double flush(double v) { return std::abs(v) < kDenormalFloor ? 0.0 : v; }
} // namespace

Processor::Processor(const GFDNParams& params) : params_(params) {
    params_.validate();
    const int N = params_.topology.total_delays();
    attenuation_.resize(N);
    input_taps_.resize(N);
    output_taps_.resize(N);
    buffers_.resize(N);
    write_pos_.assign(N, 0);
    for (int i = 0; i < N; ++i) {
        attenuation_[i] = params_.line_attenuation(i);
        input_taps_[i] = params_.input_tap(i);
        output_taps_[i] = params_.output_tap(i);
        buffers_[i].assign(params_.topology.delay_lengths[i], 0.0);
    }
}

void Processor::reset_state() {
    for (auto& buf : buffers_) std::fill(buf.begin(), buf.end(), 0.0);
    std::fill(write_pos_.begin(), write_pos_.end(), 0);
}

void Processor::update_position_gains(const std::vector<double>& source_gains,
                                      const std::vector<double>& receiver_gains) {
    const auto G = static_cast<std::size_t>(params_.topology.num_groups);
    if (source_gains.size() != G || receiver_gains.size() != G)
        throw std::invalid_argument("update_position_gains: expected length-G gain vectors");
    std::lock_guard<std::mutex> lock(pending_mutex_);
    pending_gains_ = std::make_pair(source_gains, receiver_gains);
}

void Processor::adopt_pending_gains() {
    std::optional<std::pair<std::vector<double>, std::vector<double>>> update;
    {
        std::lock_guard<std::mutex> lock(pending_mutex_);
        if (pending_gains_) {
            update = std::move(pending_gains_);
            pending_gains_.reset();
        }
    }
    if (!update) return;
    params_.source_gains = std::move(update->first);
    params_.receiver_gains = std::move(update->second);
    const int N = params_.topology.total_delays();
    for (int i = 0; i < N; ++i) {
        input_taps_[i] = params_.input_tap(i);
        output_taps_[i] = params_.output_tap(i);
    }
}

void Processor::process_block(std::span<const double> input, std::span<double> output) {
    if (buffers_.empty()) throw std::logic_error("process_block: unsized state");
    if (output.size() != input.size())
        throw std::invalid_argument("process_block: input/output size mismatch");
    adopt_pending_gains();

    const int N = params_.topology.total_delays();
    const Eigen::MatrixXd& A = params_.feedback.assembled;
    const double d = params_.direct_gain;
    std::vector<double> attenuated(N);

    for (std::size_t n = 0; n < input.size(); ++n) {
        const double x = input[n];
        double y = d * x;
        for (int i = 0; i < N; ++i) {
            // oldest sample in the ring buffer is the delay output
            const double s = buffers_[i][write_pos_[i]];
            const double t = attenuation_[i] * s;
            attenuated[i] = t;
            y += output_taps_[i] * t;
        }
        for (int i = 0; i < N; ++i) {
            double v = 0.0;
            for (int j = 0; j < N; ++j) v += A(i, j) * attenuated[j];
            buffers_[i][write_pos_[i]] = flush(v + input_taps_[i] * x);
            write_pos_[i] = (write_pos_[i] + 1) % buffers_[i].size();
        }
        output[n] = y;
    }
}

std::vector<double> Processor::process(const std::vector<double>& input, std::size_t block_size) {
    std::vector<double> out(input.size());
    for (std::size_t start = 0; start < input.size(); start += block_size) {
        const std::size_t len = std::min(block_size, input.size() - start);
        process_block({input.data() + start, len}, {out.data() + start, len});
    }
    return out;
}

std::vector<double> Processor::impulse_response(std::size_t length, std::size_t block_size) {
    std::vector<double> x(length, 0.0);
    if (!x.empty()) x[0] = 1.0;
    reset_state();
    return process(x, block_size);
}

std::vector<double> render_subband_rir(const SubbandNetworkBank& bank, const OctaveBank& filters,
                                       std::size_t length) {
    bank.validate();
    if (bank.num_bands() != filters.num_bands())
        throw std::invalid_argument("render_subband_rir: band count mismatch");

    std::vector<double> impulse(length, 0.0);
    if (!impulse.empty()) impulse[0] = 1.0;
    const auto band_inputs = filters.split(impulse);

    const int B = bank.num_bands();
    std::vector<std::vector<double>> band_outputs(B);
#pragma omp parallel for schedule(dynamic)
    for (int b = 0; b < B; ++b) {
        Processor proc(bank.networks[b]);
        band_outputs[b] = proc.process(band_inputs[b]);
    }

    std::vector<double> out(band_outputs[0].size(), 0.0);
    for (int b = 0; b < B; ++b)
        for (std::size_t n = 0; n < out.size(); ++n) out[n] += band_outputs[b][n];
    return out;
}

} // namespace gfdn
