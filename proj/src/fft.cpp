#include "gfdn/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace gfdn {

namespace {

std::mutex g_planner_mutex;
std::map<std::pair<std::size_t, int>, fftw_plan> g_plans;

fftw_plan plan_for(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    auto it = g_plans.find({n, sign});
    if (it != g_plans.end()) return it->second;
    // Planned once on a scratch buffer; executed later on caller buffers
    // via fftw_execute_dft, hence FFTW_UNALIGNED.
    fftw_complex* scratch = fftw_alloc_complex(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), scratch, scratch, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    if (!p) throw std::runtime_error("fftw planning failed");
    g_plans.emplace(std::make_pair(n, sign), p);
    return p;
}

void execute(std::vector<std::complex<double>>& x, int sign) {
    if (x.empty()) return;
    fftw_plan p = plan_for(x.size(), sign);
    auto* data = reinterpret_cast<fftw_complex*>(x.data());
    fftw_execute_dft(p, data, data);
}

} // namespace

void fft(std::vector<std::complex<double>>& x) { execute(x, FFTW_FORWARD); }

void ifft(std::vector<std::complex<double>>& x) {
    execute(x, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(x.size());
    for (auto& v : x) v *= scale;
}

std::vector<std::complex<double>> fft_copy(const std::vector<std::complex<double>>& x) {
    auto y = x;
    fft(y);
    return y;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t out_len = a.size() + b.size() - 1;

    if (a.size() * b.size() <= 1 << 14) {
        std::vector<double> out(out_len, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    }

    const std::size_t n = next_pow2(out_len);
    std::vector<std::complex<double>> fa(n), fb(n);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i];
    fft(fa);
    fft(fb);
    for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
    ifft(fa);
    std::vector<double> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = fa[i].real();
    return out;
}

} // namespace gfdn
