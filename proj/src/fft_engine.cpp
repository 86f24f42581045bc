#include "fft_engine.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace vvfm::detail {
namespace {

struct PlanCache {
    std::mutex mutex;
    std::map<std::tuple<int, std::size_t, int>, fftw_plan> plans;

    ~PlanCache() {
        for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
    }

    fftw_plan get(int dim, std::size_t n, int sign) {
        std::lock_guard lock(mutex);
        const auto key = std::make_tuple(dim, n, sign);
        if (auto it = plans.find(key); it != plans.end()) return it->second;
        // The planner scribbles on its buffer; plan on scratch and execute on caller data.
        const std::size_t total = dim == 1 ? n : n * n;
        std::vector<cplx> scratch(total);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        const int fftw_sign = sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD;
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        fftw_plan plan = dim == 1
            ? fftw_plan_dft_1d(static_cast<int>(n), buf, buf, fftw_sign, flags)
            : fftw_plan_dft_2d(static_cast<int>(n), static_cast<int>(n), buf, buf, fftw_sign, flags);
        plans.emplace(key, plan);
        return plan;
    }
};

PlanCache& cache() {
    static PlanCache instance;
    return instance;
}

}  // namespace

void dft_in_place(std::span<cplx> data, int dim, std::size_t n, int sign) {
    fftw_plan plan = cache().get(dim, n, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, buf, buf);
}

}  // namespace vvfm::detail
