// Serial vs OpenMP subset search. Usage: oracle_bench [repeats]

#include "domcover/families.hpp"
#include "domcover/oracle.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

using namespace domcover;

namespace {

double millis(const std::function<void()>& f, int repeats)
{
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const std::string& name, const std::function<void(Execution)>& f, int repeats)
{
    double s = millis([&] { f(Execution::serial); }, repeats);
    double p = millis([&] { f(Execution::parallel); }, repeats);
    std::printf("%-34s %10.2f %10.2f %7.2fx\n", name.c_str(), s, p, s / p);
}

} // namespace

int main(int argc, char** argv)
{
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d, best of %d\n", omp_get_max_threads(), repeats);
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

    const Graph sparse = random_connected_gnp(26, 1, 8, 1);
    const Graph medium = random_connected_gnp(24, 1, 5, 2);
    const Graph cyc = generate({Family::cycle, {{"n", 26}}, 0});
    const Graph cor = generate({Family::corona, {{"p", 12}}, 0});

    row("gamma, sparse gnp n=26", [&](Execution e) { gamma(sparse, e); }, repeats);
    row("cover_extrema, gnp n=24", [&](Execution e) { cover_extrema(medium, e); }, repeats);
    row("cover_extrema, C26", [&](Execution e) { cover_extrema(cyc, e); }, repeats);
    row("enumerate, corona p=12", [&](Execution e) { enumerate_gamma_sets(cor, e); }, repeats);
    row("total_cover_extrema, gnp n=24", [&](Execution e) { total_cover_extrema(medium, e); }, repeats);

    // Corpus sweep: parallel over instances, each search serial.
    std::vector<Graph> corpus;
    for (std::size_t n = 2; n <= 7; ++n)
        for (Graph& g : connected_graphs(n))
            corpus.push_back(std::move(g));
    std::vector<CoverValue> sink(corpus.size());
    auto sweep = [&](Execution e) {
        if (e == Execution::serial) {
            for (std::size_t i = 0; i < corpus.size(); ++i)
                sink[i] = cover_extrema(corpus[i], Execution::serial).cover_max;
        } else {
#pragma omp parallel for schedule(dynamic, 16)
            for (std::size_t i = 0; i < corpus.size(); ++i)
                sink[i] = cover_extrema(corpus[i], Execution::serial).cover_max;
        }
    };
    row("corpus sweep, " + std::to_string(corpus.size()) + " graphs", sweep, repeats);
    return 0;
}
