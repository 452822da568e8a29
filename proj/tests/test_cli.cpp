// Golden-file driver for the command line tool. Usage:
//   test_cli <path-to-cli> <golden-dir>
// Each golden file holds the argument line followed by the expected stdout;
// identical invocations must stay byte-identical.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

int failures = 0;

std::string run(const std::string& command, int* exit_code) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        std::cerr << "cannot run: " << command << "\n";
        std::exit(1);
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    int status = pclose(pipe);
    *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return output;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: test_cli <cli> <golden-dir>\n";
        return 2;
    }
    std::string cli = argv[1];
    std::vector<fs::path> goldens;
    for (const auto& entry : fs::directory_iterator(argv[2]))
        if (entry.path().extension() == ".txt") goldens.push_back(entry.path());
    std::sort(goldens.begin(), goldens.end());
    expect(!goldens.empty(), "golden directory is empty");

    for (const fs::path& path : goldens) {
        std::ifstream in(path);
        std::string args;
        std::getline(in, args);
        std::stringstream rest;
        rest << in.rdbuf();
        int code = -1;
        std::string got = run(cli + " " + args + " 2>/dev/null", &code);
        expect(code == 0, path.filename().string() + " exit code " + std::to_string(code));
        if (got != rest.str()) {
            ++failures;
            std::cerr << "FAIL: " << path.filename().string() << " output differs\n";
        }
        // determinism: byte-identical on a second run
        int code2 = -1;
        std::string again = run(cli + " " + args + " 2>/dev/null", &code2);
        expect(again == got, path.filename().string() + " not deterministic");
    }

    // Domain errors exit 1 with a one-line diagnostic.
    int code = -1;
    run(cli + " bij --l 3 --partition 3,1,1,1 2>/dev/null", &code);
    expect(code == 1, "non-core input should exit 1");
    run(cli + " classify --l 2 --partition 1,3 2>/dev/null", &code);
    expect(code == 2, "malformed partition should exit 2");
    run(cli + " classify --l 2 --bogus 2>/dev/null", &code);
    expect(code == 2, "unknown flag should exit 2");
    run(cli + " crystal --variant ladder --l 2 --levels 1 2>/dev/null", &code);
    expect(code == 1, "ladder crystal at l=2 should exit 1");
    run(cli + " classify --l 1 --partition 2 2>/dev/null", &code);
    expect(code == 2, "l=1 should be rejected as usage");
    run(cli + " bij --l 3 --partition 2,1 --inverse 2>/dev/null", &code);
    expect(code == 2, "--inverse without --k should exit 2");

    // --jobs sharding must not change the output.
    int ca = -1, cb = -1;
    std::string serial = run(cli + " reg --l 3 --op class --partition 3,3,2,1", &ca);
    std::string parallel = run(cli + " --jobs 4 reg --l 3 --op class --partition 3,3,2,1", &cb);
    expect(ca == 0 && cb == 0 && serial == parallel, "--jobs changed the class output");

    if (failures == 0) {
        std::cout << "cli golden tests passed (" << goldens.size() << " files)\n";
        return 0;
    }
    std::cerr << failures << " cli test(s) failed\n";
    return 1;
}
