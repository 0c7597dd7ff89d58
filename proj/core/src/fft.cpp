#include "ghostsim/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace ghostsim::fft {

namespace {

using PlanKey = std::tuple<int, int, int, int, int>;  // kind, nx, ny, nt, sign

std::mutex g_plan_mutex;
std::map<PlanKey, fftw_plan> g_plans;

// FFTW_UNALIGNED so a cached plan can be re-executed on any array of the
// same geometry via fftw_execute_dft.
fftw_plan plan_for(const PlanKey& key)
{
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second;

    auto [kind, nx, ny, nt, sign] = key;
    std::vector<fftw_complex> scratch(static_cast<std::size_t>(nx) * ny * nt);
    fftw_plan plan = nullptr;
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    if (kind == 0) {  // spatial: rank-2 (ny, nx) batched over nt
        int dims2[2] = {ny, nx};
        int rank = (ny == 1) ? 1 : 2;
        int* dims = (ny == 1) ? &dims2[1] : dims2;
        plan = fftw_plan_many_dft(rank, dims, nt,
                                  scratch.data(), nullptr, 1, nx * ny,
                                  scratch.data(), nullptr, 1, nx * ny,
                                  sign, flags);
    } else {  // temporal: rank-1 nt, stride nx*ny, batched over nx*ny
        int n = nt;
        plan = fftw_plan_many_dft(1, &n, nx * ny,
                                  scratch.data(), nullptr, nx * ny, 1,
                                  scratch.data(), nullptr, nx * ny, 1,
                                  sign, flags);
    }
    g_plans.emplace(key, plan);
    return plan;
}

void execute(const PlanKey& key, std::complex<double>* data, double norm)
{
    fftw_plan plan = plan_for(key);
    auto* raw = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, raw, raw);
    auto [kind, nx, ny, nt, sign] = key;
    const std::size_t total = static_cast<std::size_t>(nx) * ny * nt;
    for (std::size_t i = 0; i < total; ++i) data[i] *= norm;
}

}  // namespace

void spatial(std::span<std::complex<double>> data, int nx, int ny, int nt, int sign)
{
    if (nx * ny == 1) return;
    const double norm = 1.0 / std::sqrt(static_cast<double>(nx) * ny);
    execute({0, nx, ny, nt, sign}, data.data(), norm);
}

void temporal(std::span<std::complex<double>> data, int nx, int ny, int nt, int sign)
{
    if (nt == 1) return;
    const double norm = 1.0 / std::sqrt(static_cast<double>(nt));
    execute({1, nx, ny, nt, sign}, data.data(), norm);
}

}  // namespace ghostsim::fft
