// End-to-end exercise of the command-line binary: spawns the real executable
// (path in argv[1]) inside a scratch directory and checks artifacts and exit
// codes. One verdict line per scenario; exit code = number of failures.
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string g_binary;
int failures = 0;

void verdict(const char* label, bool pass, const std::string& detail = "") {
    std::printf("cli %-38s %s%s%s\n", label, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " ", detail.c_str());
    if (!pass) ++failures;
}

int run(const std::string& args) {
    const std::string cmd = g_binary + " " + args + " >stdout.txt 2>stderr.txt";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) return "<missing file: " + path + ">";
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& path) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in(path, std::ios::binary);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

const std::string kBase = "--eta 1 --omega 1 --mass 1 --dipole 0.01 --e0 1";

void scenario_spectrum_happy() {
    const int code = run("spectrum " + kBase + " --out s1");
    const auto rows = parse_csv("s1.csv");
    bool row_ok = false;
    double energy = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].size() == 9 && rows[i][0] == "0" && rows[i][1] == "0" &&
            rows[i][2] == "1") {
            energy = std::strtod(rows[i][5].c_str(), nullptr);
            row_ok = std::fabs(energy - 0.52961157724648777) <= 1e-9;
        }
    const std::string json = slurp("s1.json");
    const bool json_ok = json.find("\"artifact\": \"hmw\"") != std::string::npos &&
                         json.find("\"cyclotron_frequency\"") != std::string::npos;
    verdict("spectrum happy path", code == 0 && row_ok && json_ok,
            "exit " + std::to_string(code));
}

void scenario_deficit_bound() {
    const int code = run("spectrum --eta 1.5 --omega 1 --mass 1 --dipole 0.01 --e0 1");
    const bool named = slurp("stderr.txt").find("eta") != std::string::npos;
    const int code2 = run(
        "spectrum --eta 1.5 --omega 1 --mass 1 --dipole 0.01 --e0 1 "
        "--allow-disclination --out disc");
    verdict("deficit bound enforced and bypassable",
            code == 2 && named && code2 == 0,
            "exit " + std::to_string(code) + "/" + std::to_string(code2));
}

void scenario_rotation_required() {
    const int code = run("spectrum --eta 1 --omega 0 --mass 1 --dipole 0.01 --e0 1");
    const bool named = slurp("stderr.txt").find("omega") != std::string::npos;
    verdict("rotation required for spectra", code == 2 && named,
            "exit " + std::to_string(code));
}

void scenario_static_fields() {
    const int code = run("fields --eta 1 --omega 0 --mass 1 --dipole 0.01 --e0 1 "
                         "--grid-points 502 --out f0");
    const auto rows = parse_csv("f0.csv");
    bool zeros = rows.size() > 1;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].size() != 7 ||
            std::strtod(rows[i][5].c_str(), nullptr) != 0.0)
            zeros = false;
    const bool null_radius =
        slurp("f0.json").find("\"physical_radius\": null") != std::string::npos;
    verdict("static limit fields", code == 0 && zeros && null_radius,
            "exit " + std::to_string(code));
}

void scenario_determinism() {
    const std::string cmd = "spectrum " + kBase + " --n-max 2 --out rep";
    if (run(cmd) != 0) {
        verdict("byte-deterministic outputs", false, "first run failed");
        return;
    }
    const std::string csv1 = slurp("rep.csv"), json1 = slurp("rep.json");
    if (run(cmd) != 0) {
        verdict("byte-deterministic outputs", false, "second run failed");
        return;
    }
    verdict("byte-deterministic outputs",
            csv1 == slurp("rep.csv") && json1 == slurp("rep.json"));
}

void scenario_verify() {
    const std::string sweep = "verify --eta 0.8 --omega 1 --mass 1 --dipole 0.05 "
                              "--e0 1 --n-max 1 --l-min -1 --l-max 1 "
                              "--grid-points 2002 --out v1";
    const int ok = run(sweep);
    const auto rows = parse_csv("v1.csv");
    const bool shape = rows.size() == 13 && rows[0].size() == 7; // header + 12 states
    const int strict = run(sweep + " --tol 0");
    verdict("oracle verification exit codes", ok == 0 && shape && strict == 1,
            "exit " + std::to_string(ok) + "/" + std::to_string(strict));
}

void scenario_config_file() {
    {
        std::ofstream out("bad.conf", std::ios::binary);
        out << "eta = 0.9\nomega = 1.0\nmass = 1.0\ndipole = 0.01\ne0 = 1.0\n"
            << "masss = 2.0\n";
    }
    const int code = run("spectrum --config bad.conf");
    const bool named = slurp("stderr.txt").find("masss") != std::string::npos;
    {
        std::ofstream out("good.conf", std::ios::binary);
        out << "# sample configuration\neta = 0.9\nomega = 1.0\nmass = 1.0\n"
            << "dipole = 0.01\ne0 = 1.0\nn_max = 1\n";
    }
    const int code2 = run("spectrum --config good.conf --n-max 0 --out fromfile");
    const auto rows = parse_csv("fromfile.csv");
    // n_max 0 from the flag overrides 1 from the file: 1 x 5 x 2 levels
    const bool overridden = rows.size() == 11;
    verdict("config files and overrides", code == 2 && named && code2 == 0 && overridden,
            "exit " + std::to_string(code) + "/" + std::to_string(code2));
}

void scenario_missing_required() {
    const int code = run("spectrum --eta 1 --omega 1 --dipole 0.01 --e0 1");
    const bool named = slurp("stderr.txt").find("mass") != std::string::npos;
    verdict("missing required key named", code == 2 && named,
            "exit " + std::to_string(code));
}

void scenario_wavefunction() {
    const int code = run("wavefunction " + kBase +
                         " --n 0 --l 0 --spin +1 --grid-points 2002 --out w1");
    const auto radial = parse_csv("w1.csv");
    const auto spinor = parse_csv("w1_spinor.csv");
    const bool shapes = radial.size() == 2001 && radial[0].size() == 3 &&
                        spinor.size() == 2001 && spinor[0].size() == 9;
    const std::string json = slurp("w1.json");
    const bool keys = json.find("\"dirac_residual\"") != std::string::npos &&
                      json.find("\"tail_mass\"") != std::string::npos;
    const int both = run("wavefunction " + kBase + " --n 0 --l 0 --spin both");
    const bool named = slurp("stderr.txt").find("spin") != std::string::npos;
    verdict("wavefunction artifacts", code == 0 && shapes && keys && both == 2 && named,
            "exit " + std::to_string(code) + "/" + std::to_string(both));
}

void scenario_usage_errors() {
    const int bogus = run("bogus " + kBase);
    const int none = run("");
    const int version = run("--version");
    verdict("usage errors and version flag",
            bogus == 2 && none == 2 && version == 0,
            std::to_string(bogus) + "/" + std::to_string(none) + "/" +
                std::to_string(version));
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-binary>\n");
        return 1;
    }
    g_binary = argv[1];
    char tmpl[] = "/tmp/hmw_cli_XXXXXX";
    if (mkdtemp(tmpl) == nullptr || chdir(tmpl) != 0) {
        std::fprintf(stderr, "cannot create scratch directory\n");
        return 1;
    }
    scenario_spectrum_happy();
    scenario_deficit_bound();
    scenario_rotation_required();
    scenario_static_fields();
    scenario_determinism();
    scenario_verify();
    scenario_config_file();
    scenario_missing_required();
    scenario_wavefunction();
    scenario_usage_errors();
    std::printf("%d scenarios failed\n", failures);
    return failures;
}
