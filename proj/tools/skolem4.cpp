#include "skolem/report.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace skolem;

namespace {

int usage() {
    std::cerr <<
        "usage: skolem4 decide <file> [options]\n"
        "       skolem4 decide --batch <dir> [options]\n"
        "options:\n"
        "  --mode certify|report   certify re-verifies every bound (default: certify)\n"
        "  --cap N                 exhaustive-search ceiling\n"
        "  --sieve-budget K        modulus budget for the residue sieve\n"
        "  --precision BITS        working interval precision\n"
        "  --json PATH             machine report to PATH (a directory in batch mode)\n"
        "exit status: 0 decided, 2 bounded, 1 error\n";
    return 1;
}

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw ? static_cast<int>(hw) : 4;
    if (n > 8) n = 8;
    if (const char* env = std::getenv("SKOLEM4_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end && *end == '\0' && cap >= 1 && cap < n) n = static_cast<int>(cap);
    }
    return n;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    check_input(in.good(), "cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Flags {
    std::optional<RunMode> mode;
    std::optional<Int> cap;
    std::optional<unsigned long> sieve_budget;
    std::optional<long> precision;
    std::string json;
    std::string batch;
};

// Returns the process exit code for one problem file.
int run_one(const fs::path& file, const Flags& fl, const fs::path& json_out) {
    ProblemFile p = parse_problem(slurp(file));
    if (fl.mode) p.mode = *fl.mode;
    if (fl.cap) p.cap = *fl.cap;
    if (fl.sieve_budget) p.sieve_budget = *fl.sieve_budget;
    if (fl.precision) p.precision = *fl.precision;

    auto t0 = std::chrono::steady_clock::now();
    RunArtifacts ra = analyze(p, worker_count());
    if (p.mode == RunMode::Certify)
        check_input(replay(ra), "certificate replay failed");
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    std::cout << human_report(ra);
    std::cerr << file.filename().string() << ": " << ms << " ms\n";

    if (!json_out.empty()) {
        std::ofstream out(json_out);
        check_input(out.good(), "cannot write " + json_out.string());
        out << machine_report(ra);
    }
    return ra.result.status == Status::Decided ? 0 : 2;
}

int run(int argc, char** argv) {
    if (argc < 2 || std::string(argv[1]) != "decide") return usage();

    Flags fl;
    std::string file;
    for (int i = 2; i < argc; ++i) {
        std::string a = argv[i];
        auto val = [&]() -> std::string {
            check_input(i + 1 < argc, "missing value after " + a);
            return argv[++i];
        };
        if (a == "--mode") {
            std::string m = val();
            check_input(m == "certify" || m == "report",
                        "mode must be 'certify' or 'report'");
            fl.mode = m == "certify" ? RunMode::Certify : RunMode::Report;
        } else if (a == "--cap") {
            fl.cap = Int(val());
            check_input(*fl.cap >= 0, "cap must be nonnegative");
        } else if (a == "--sieve-budget") {
            long k = std::stol(val());
            check_input(k >= 1, "sieve budget must be positive");
            fl.sieve_budget = static_cast<unsigned long>(k);
        } else if (a == "--precision") {
            long b = std::stol(val());
            check_input(b >= 64 && b <= (1l << 16), "precision out of range");
            fl.precision = b;
        } else if (a == "--json") {
            fl.json = val();
        } else if (a == "--batch") {
            fl.batch = val();
        } else if (!a.empty() && a[0] == '-') {
            std::cerr << "unknown option " << a << "\n";
            return usage();
        } else {
            check_input(file.empty(), "more than one problem file given");
            file = a;
        }
    }

    if (fl.batch.empty()) {
        if (file.empty()) return usage();
        return run_one(file, fl, fs::path(fl.json));
    }

    check_input(file.empty(), "--batch replaces the <file> argument");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(fl.batch))
        if (e.is_regular_file() && e.path().extension() == ".problem")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    check_input(!files.empty(), "no .problem files in " + fl.batch);
    if (!fl.json.empty()) fs::create_directories(fl.json);

    int exit = 0;
    for (const auto& f : files) {
        std::cout << "== " << f.filename().string() << " ==\n";
        fs::path jo;
        if (!fl.json.empty())
            jo = fs::path(fl.json) / f.filename().replace_extension(".json");
        int rc = 1;
        try {
            rc = run_one(f, fl, jo);
        } catch (const std::exception& e) {
            std::cout << "error: " << e.what() << "\n";
        }
        if (rc == 1) exit = 1;                      // errors dominate
        else if (rc != 0 && exit == 0) exit = rc;   // then bounded
        std::cout << "\n";
    }
    return exit;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
