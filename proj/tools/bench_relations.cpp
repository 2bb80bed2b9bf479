// Times the defining-relation checker: serial reference vs the OpenMP
// kernel. Fresh module instances per run so the derivation memo of one run
// cannot feed the next.

#include <chrono>
#include <cstdio>
#include <memory>

#include <yanglab/dense.hpp>
#include <yanglab/relations.hpp>
#include <yanglab/tensor.hpp>
#include <yanglab/wm.hpp>

using namespace yanglab;

namespace {

std::shared_ptr<TensorModule> fresh_u() {
    auto dense = std::make_shared<DenseModule>(Rational(1), Rational(9), QuadScalar(0));
    return std::make_shared<TensorModule>(dense, std::make_shared<WmModule>(1, QuadScalar(1)));
}

std::shared_ptr<DenseModule> fresh_dense() {
    return std::make_shared<DenseModule>(Rational(1, 2), Rational(2),
                                         QuadScalar(Rational(1, 3)));
}

template <typename MakeModule, typename Checker>
double time_ms(MakeModule make, Checker check, unsigned K, int window, size_t& out_reports) {
    auto m = make();
    auto sample = m->basis_window(window);
    auto t0 = std::chrono::steady_clock::now();
    auto reports = check(*m, K, sample);
    auto t1 = std::chrono::steady_clock::now();
    out_reports = reports.size();
    for (const RelationReport& r : reports)
        if (!r.pass()) std::fprintf(stderr, "unexpected relation failure\n");
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
    struct Case {
        const char* name;
        unsigned K;
        int window;
    };

    std::printf("relation checker benchmark (%d workers)\n", relation_worker_count());
    std::printf("%-28s %4s %6s %12s %12s %9s %8s\n", "module", "K", "window",
                "serial[ms]", "openmp[ms]", "speedup", "reports");

    const Case cases[] = {{"U = V(1,9,0) (x) W_1(1)", 3, 5},
                          {"U = V(1,9,0) (x) W_1(1)", 4, 5},
                          {"V(1/2,2,1/3)", 3, 8},
                          {"V(1/2,2,1/3)", 4, 8}};

    for (const Case& c : cases) {
        size_t n_serial = 0, n_parallel = 0;
        bool tensor = c.name[0] == 'U';
        auto run_serial = [&] {
            if (tensor)
                return time_ms(fresh_u, [](const Module& m, unsigned K, auto s) {
                    return check_defining_relations_serial(m, K, s);
                }, c.K, c.window, n_serial);
            return time_ms(fresh_dense, [](const Module& m, unsigned K, auto s) {
                return check_defining_relations_serial(m, K, s);
            }, c.K, c.window, n_serial);
        };
        auto run_parallel = [&] {
            if (tensor)
                return time_ms(fresh_u, [](const Module& m, unsigned K, auto s) {
                    return check_defining_relations(m, K, s);
                }, c.K, c.window, n_parallel);
            return time_ms(fresh_dense, [](const Module& m, unsigned K, auto s) {
                return check_defining_relations(m, K, s);
            }, c.K, c.window, n_parallel);
        };

        double serial = run_serial();
        double parallel = run_parallel();
        if (n_serial != n_parallel) std::fprintf(stderr, "report count mismatch\n");
        std::printf("%-28s %4u %6d %12.2f %12.2f %8.2fx %8zu\n", c.name, c.K, c.window,
                    serial, parallel, serial / parallel, n_serial);
    }
    return 0;
}
