// Timing harness: parallel DFS vs serial DFS vs the naive reference oracle.
#include <chrono>
#include <iostream>
#include <string>

#include "zgu/solver.hpp"

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: bench_enumerate <table.json> <order> [--with-reference]\n";
        return 1;
    }
    const zgu::CharacterTable table = zgu::CharacterTable::load_file(argv[1]);
    const long n = std::stol(argv[2]);
    const bool withRef = argc > 3 && std::string(argv[3]) == "--with-reference";

    auto time = [](auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto count = fn();
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return std::pair<size_t, double>(count, ms);
    };

    zgu::SolveOptions par, ser;
    ser.parallel = false;

    auto [np, tp] = time([&] { return zgu::enumerate_standard(table, n, par).size(); });
    std::cout << "parallel DFS: " << np << " solutions in " << tp << " ms\n";
    auto [ns, ts] = time([&] { return zgu::enumerate_standard(table, n, ser).size(); });
    std::cout << "serial DFS:   " << ns << " solutions in " << ts << " ms\n";
    if (np != ns) {
        std::cerr << "MISMATCH between parallel and serial counts\n";
        return 2;
    }
    if (withRef) {
        zgu::CompileOptions copts;
        copts.use_cl_congruences = false;
        copts.use_folklore_congruences = false;
        auto [nr, tr] = time([&] { return zgu::reference_enumerate(table, n, copts).size(); });
        std::cout << "reference:    " << nr << " solutions in " << tr
                  << " ms (congruences off on this path)\n";
    }
    return 0;
}
