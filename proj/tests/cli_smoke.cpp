// End-to-end smoke test for the command-line driver. Run as:
//   cli_smoke path/to/wavekin
// Exercises exit codes and the presence/shape of the output files.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "ok:   " : "FAIL: ") << what << "\n";
    if (!ok) ++failures;
}

int run(const std::string& cmd) {
    const int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
    if (rc == -1) return -1;
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : 128;
}

void write_file(const fs::path& p, const std::string& text) {
    fs::create_directories(p.parent_path());
    std::ofstream(p) << text;
}

std::string first_line(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    return line;
}

std::size_t line_count(const fs::path& p) {
    std::ifstream in(p);
    std::size_t n = 0;
    std::string line;
    while (std::getline(in, line)) ++n;
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_smoke <wavekin-binary>\n";
        return 2;
    }
    const std::string bin = argv[1];
    const fs::path work = fs::temp_directory_path() / "wavekin_cli_smoke";
    fs::remove_all(work);
    fs::create_directories(work);

    check(run(bin + " presets") == 0, "presets exits 0");
    check(run(bin + " run") != 0, "run without --config fails");

    const fs::path cfg = work / "run.cfg";
    write_file(cfg,
               "grid.R = 8\n"
               "grid.h = 0.5\n"
               "kernel.gamma = 2\n"
               "ic.preset = square\n"
               "time.dt = 0.0001\n"
               "time.T = 0.05\n"
               "out.cadence = 10\n"
               "out.snapshots = 0.025\n"
               "label = smoke\n");
    const fs::path outdir = work / "out";
    const int rc_run = run(bin + " run --config " + cfg.string() + " --set out.dir=" +
                           outdir.string());
    check(rc_run == 0, "run exits 0 on a valid config");
    check(fs::exists(outdir / "smoke" / "moments.csv"), "run writes moments.csv");
    check(fs::exists(outdir / "smoke" / "snapshots.csv"), "run writes snapshots.csv");
    check(fs::exists(outdir / "smoke" / "report.txt"), "run writes report.txt");
    check(first_line(outdir / "smoke" / "moments.csv") ==
              "t,m0,m1,m2,m3,linf,argmax_k,neg_count,min_val",
          "moments.csv header");
    check(first_line(outdir / "smoke" / "snapshots.csv") == "t,k,g,f", "snapshots.csv header");
    check(line_count(outdir / "smoke" / "moments.csv") >= 3, "moments.csv has data rows");

    const fs::path bad = work / "bad.cfg";
    write_file(bad, "grid.R = 8\nbogus.key = 1\n");
    check(run(bin + " run --config " + bad.string()) == 2, "unknown key exits 2");
    check(run(bin + " run --config " + (work / "missing.cfg").string()) != 0,
          "missing config file fails");

    // Instability abort: enormous dt with the CFL guard off must exit 3.
    const fs::path unstable = work / "unstable.cfg";
    write_file(unstable,
               "grid.R = 8\n"
               "grid.h = 0.5\n"
               "kernel.gamma = 2\n"
               "ic.preset = square\n"
               "time.dt = 1000\n"
               "time.T = 10000\n"
               "time.cfl = off\n"
               "label = unstable\n");
    check(run(bin + " run --config " + unstable.string() + " --set out.dir=" +
              (work / "out_unstable").string()) == 3,
          "unstable run exits 3");

    const fs::path eoc_cfg = work / "eoc.cfg";
    write_file(eoc_cfg,
               "grid.R = 4\n"
               "grid.h = 1\n"
               "kernel.gamma = 2\n"
               "ic.preset = square\n"
               "time.dt = 0.0002\n"
               "time.T = 0.5\n"
               "label = eoc_smoke\n");
    const fs::path eoc_out = work / "out_eoc";
    check(run(bin + " eoc --config " + eoc_cfg.string() + " --coarse 1.0,0.5 --hstar 0.125" +
              " --set out.dir=" + eoc_out.string()) == 0,
          "eoc exits 0");
    check(fs::exists(eoc_out / "eoc_smoke" / "eoc.csv"), "eoc writes eoc.csv");
    check(first_line(eoc_out / "eoc_smoke" / "eoc.csv") ==
              "h,p_paper_formula,p_classical,t_max,l1_h_hstar",
          "eoc.csv header");
    check(line_count(eoc_out / "eoc_smoke" / "eoc.csv") == 3, "eoc.csv has one row per coarse h");

    const fs::path sweep_cfg = work / "sweep.cfg";
    write_file(sweep_cfg,
               "grid.R = 4\n"
               "grid.h = 0.5\n"
               "kernel.gamma = 2\n"
               "ic.preset = square\n"
               "time.dt = 0.0005\n"
               "time.T = 1\n"
               "label = sweep_smoke\n");
    const fs::path sweep_out = work / "out_sweep";
    check(run(bin + " sweep --config " + sweep_cfg.string() + " --axis gamma --values 1.5,2.0" +
              " --set out.dir=" + sweep_out.string()) == 0,
          "sweep exits 0");
    const fs::path sweep_csv = sweep_out / "sweep_smoke" / "decay_rates.csv";
    check(fs::exists(sweep_csv), "sweep writes decay_rates.csv");
    check(line_count(sweep_csv) == 3, "decay_rates.csv has one row per value");
    check(run(bin + " sweep --config " + sweep_cfg.string() + " --axis nope --values 1" +
              " --set out.dir=" + sweep_out.string()) == 2,
          "bad sweep axis exits 2");

    std::cout << (failures ? "cli_smoke: FAILURES\n" : "cli_smoke: all checks passed\n");
    return failures ? 1 : 0;
}
