// Compares the OpenMP rref/multiply kernels against the serial reference
// implementations on voting-sized and synthetic rational matrices, checking
// that both produce identical results.

#include <chrono>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vote/linalg.hpp"
#include "vote/pairs.hpp"

using namespace vote;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed, long max_num = 9, long max_den = 3) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(num(rng), den(rng));
    return m;
}

template <typename F, typename G>
void bench(const std::string& name, F parallel, G serial) {
    const double t0 = now_ms();
    const auto a = parallel();
    const double t1 = now_ms();
    const auto b = serial();
    const double t2 = now_ms();
    const bool same = a == b;
    std::cout << name << ": parallel " << (t1 - t0) << " ms, serial " << (t2 - t1) << " ms, speedup "
              << (t2 - t1) / (t1 - t0 + 1e-9) << "x, identical: " << (same ? "yes" : "NO") << "\n";
    if (!same) std::exit(1);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns run serially\n";
#endif

    const Matrix square = random_matrix(100, 150, 42);
    bench("rref 100x150 random", [&] { return rref(square).mat; }, [&] { return reference::rref(square).mat; });

    const Matrix a = random_matrix(120, 120, 7);
    const Matrix b = random_matrix(120, 120, 8);
    bench("multiply 120x120 random", [&] { return multiply(a, b); }, [&] { return reference::multiply(a, b); });

    // Canonicalizing the kernel of a positional map at n=6 is the heavy step
    // behind recoverability checks on full rankings.
    const Matrix kernel6 = Matrix::from_rows(kernel_vectors(positional_matrix(borda_vector(6))));
    bench("rref kernel basis of T_borda n=6 (714x720)", [&] { return rref(kernel6).mat; },
          [&] { return reference::rref(kernel6).mat; });

    return 0;
}
