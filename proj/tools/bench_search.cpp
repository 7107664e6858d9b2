#include <omp.h>

#include <chrono>
#include <iostream>
#include <map>
#include <string>

#include "kva/json_io.hpp"

using namespace kva;

namespace {

template <typename F>
double best_ms(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    std::map<std::string, std::string> opt;
    for (int i = 1; i + 1 < argc; i += 2) opt[argv[i]] = argv[i + 1];
    auto get = [&](const char* key, long fallback) {
        auto it = opt.find(key);
        return it == opt.end() ? fallback : std::stol(it->second);
    };
    /* defaults sit close to the window edge so the ell cap is large */
    Int d = get("--d", 60), alpha = get("--alpha", 0), k = get("--k", 1), r = get("--r", 118);
    Int emin = get("--e-min", 4);
    int reps = static_cast<int>(get("--reps", 3));

    ProfileSearch in{d, alpha, k, r, emin, std::nullopt, std::nullopt};
    SearchOutcome serial_out, parallel_out;
    double t_serial = best_ms(reps, [&] { serial_out = search_profiles_serial(in); });
    double t_parallel = best_ms(reps, [&] { parallel_out = search_profiles(in); });
    bool agree = json_search(serial_out) == json_search(parallel_out);

    std::cout << "profile search d=" << d.get_str() << " alpha=" << alpha.get_str()
              << " k=" << k.get_str() << " r=" << r.get_str() << " e-min=" << emin.get_str()
              << "\n";
    std::cout << "  ell cap " << serial_out.cap.get_str() << ", candidates examined "
              << serial_out.examined.get_str() << ", survivors " << serial_out.survivors.size()
              << ", pruned " << serial_out.pruned.size() << "\n";
    std::cout << "  serial reference: " << t_serial << " ms (best of " << reps << ")\n";
    std::cout << "  openmp kernel (" << omp_get_max_threads() << " threads): " << t_parallel
              << " ms (best of " << reps << ")\n";
    std::cout << "  outputs " << (agree ? "identical" : "DIFFER") << ", speedup x"
              << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "\n";
    return agree ? 0 : 1;
}
