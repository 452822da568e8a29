// Command-line front end: classify, crystal, bij, count, reg, abacus.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <thread>

#include "corecrystal/abacus.hpp"
#include "corecrystal/corebij.hpp"
#include "corecrystal/counting.hpp"
#include "corecrystal/crystal.hpp"
#include "corecrystal/partition.hpp"
#include "corecrystal/regular.hpp"
#include "corecrystal/rimhook.hpp"

namespace cc = corecrystal;
using json = nlohmann::ordered_json;

namespace {

json parts_json(const cc::Partition& lam) {
    json arr = json::array();
    for (int p : lam.parts()) arr.push_back(p);
    return arr;
}

json vector_json(const std::vector<long long>& v) {
    json arr = json::array();
    for (long long x : v) arr.push_back(x);
    return arr;
}

json letters_json(const cc::CoxeterWord& w) {
    json arr = json::array();
    for (int l : w.letters) arr.push_back(l);
    return arr;
}

json bigint_json(const cc::BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

void emit(const json& out) { std::cout << out.dump() << "\n"; }

struct Options {
    int ell = 2;
    int jobs = 1;
    std::string partition_text;
    std::string variant = "classical";
    int levels = 0;
    std::string format = "json";
    bool inverse = false;
    int k = -1;
    std::string show;
    std::string what;
    int upto = 10;
    std::string core_text;
    int weight = -1;
    bool as_json = false;
    std::string op;
    bool show_abacus = false;
};

int run_classify(const Options& opt) {
    cc::Partition lam = cc::Partition::parse(opt.partition_text);
    auto [core, weight] = cc::core_and_weight(lam, opt.ell);
    json out;
    out["partition"] = parts_json(lam);
    out["l"] = opt.ell;
    out["core"] = parts_json(core);
    out["weight"] = weight;
    out["regular"] = cc::is_regular(lam, opt.ell);
    out["carter"] = cc::is_carter(lam, opt.ell);
    out["ell_partition"] = cc::is_ell_partition(lam, opt.ell);
    if (opt.ell >= 3) {
        out["jm"] = cc::is_jm(lam, opt.ell);
        out["generalized"] = cc::is_generalized_ell(lam, opt.ell);
        out["L"] = cc::is_L_partition(lam, opt.ell);
        out["ladder_node"] = cc::is_ladder_node(lam, opt.ell);
    } else {
        out["jm"] = nullptr;
        out["generalized"] = nullptr;
        out["L"] = nullptr;
        out["ladder_node"] = nullptr;
    }
    emit(out);
    return 0;
}

int run_crystal(const Options& opt) {
    cc::CrystalVariant variant = opt.variant == "ladder" ? cc::CrystalVariant::ladder
                                                         : cc::CrystalVariant::classical;
    cc::CrystalGraph g = cc::generate(variant, opt.ell, opt.levels);
    if (opt.format == "dot") {
        std::cout << cc::to_dot(g);
        return 0;
    }
    json out;
    json nodes = json::array();
    for (const cc::Partition* p : g.flat()) nodes.push_back(parts_json(*p));
    json edges = json::array();
    for (const cc::CrystalEdge& e : g.edges)
        edges.push_back(json::array({e.src, e.dst, e.residue}));
    out["nodes"] = nodes;
    out["edges"] = edges;
    emit(out);
    return 0;
}

json bij_abacus_section(const cc::Partition& lam, int ell) {
    json section;
    std::vector<long long> beta;
    for (int i = 1; i <= lam.length(); ++i)
        beta.push_back(cc::hook_length(lam, {i, 1}));
    int removed = beta.empty() ? ell - 1 : static_cast<int>(beta.front() % ell);
    std::vector<long long> image_beta;
    for (long long p : beta) {
        int c = static_cast<int>(p % ell);
        if (c == removed) continue;
        image_beta.push_back((p / ell) * (ell - 1) + c - (c > removed ? 1 : 0));
    }
    std::sort(image_beta.rbegin(), image_beta.rend());
    section["beta"] = vector_json(beta);
    section["removed_runner"] = removed;
    section["image_beta"] = vector_json(image_beta);
    return section;
}

json bij_rows_section(const cc::Partition& lam, int ell) {
    json section;
    std::vector<long long> hooks;
    json kept = json::array();
    for (int i = 1; i <= lam.length(); ++i)
        hooks.push_back(cc::hook_length(lam, {i, 1}));
    if (!lam.empty()) {
        int target = static_cast<int>(hooks.front() % ell);
        for (int i = 1; i <= lam.length(); ++i)
            if (hooks[static_cast<std::size_t>(i - 1)] % ell != target) kept.push_back(i);
    }
    section["first_column_hooks"] = vector_json(hooks);
    section["kept_rows"] = kept;
    section["image"] = parts_json(cc::phi_rows(lam, ell));
    return section;
}

json bij_geometry_section(const cc::Partition& lam, int ell) {
    json section;
    cc::RootVector a = cc::to_root_vector(lam, ell);
    std::size_t i = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] >= a[i]) i = j;
    section["vector"] = vector_json(a);
    section["dropped_index"] = i;
    section["power"] = a[i];
    std::vector<long long> image = cc::phi_geometric(a, ell);
    section["image_vector"] = vector_json(image);
    section["image"] = parts_json(cc::from_root_vector(image, ell - 1));
    return section;
}

json bij_word_section(const cc::Partition& lam, int ell) {
    json section;
    cc::Subexpression sub = cc::phi_subexpression(lam, ell);
    section["word"] = letters_json(sub.word);
    json j = json::array();
    for (int idx : sub.j_indices) j.push_back(idx);
    section["j_indices"] = j;
    section["relabelled"] = letters_json(sub.relabelled);
    section["length"] = cc::coxeter_length(lam, ell);
    section["image_length"] = cc::coxeter_length(cc::phi(lam, ell), ell - 1);
    return section;
}

json bij_lm_section(const cc::Partition& lam, int ell) {
    json section;
    cc::Partition rho = cc::lm_rho(lam, ell);
    section["rho"] = parts_json(rho);
    section["upsilon"] = parts_json(cc::upsilon(rho));
    cc::Partition tilde = cc::transpose(cc::phi(cc::transpose(lam), ell));
    section["image_rho"] = parts_json(cc::lm_rho(tilde, ell - 1));
    section["commutes"] = cc::verify_lm_diagram(lam, ell);
    return section;
}

int run_bij(const Options& opt) {
    json out;
    out["l"] = opt.ell;
    if (opt.inverse) {
        if (opt.k < 0) {
            std::cerr << "error: --inverse needs --k\n";
            return 2;
        }
        cc::Partition mu = cc::Partition::parse(opt.partition_text);
        out["partition"] = parts_json(mu);
        out["k"] = opt.k;
        out["image"] = parts_json(cc::phi_inverse(mu, opt.ell, opt.k));
        emit(out);
        return 0;
    }
    cc::Partition lam = cc::Partition::parse(opt.partition_text);
    cc::Partition image = cc::phi(lam, opt.ell);
    out["partition"] = parts_json(lam);
    out["k"] = lam.part(1);
    out["image"] = parts_json(image);
    bool all = opt.show.empty();
    if (all || opt.show == "abacus") out["abacus"] = bij_abacus_section(lam, opt.ell);
    if (all || opt.show == "rows") out["rows"] = bij_rows_section(lam, opt.ell);
    if (all || opt.show == "geometry") out["geometry"] = bij_geometry_section(lam, opt.ell);
    if (all || opt.show == "word") out["word"] = bij_word_section(lam, opt.ell);
    if ((all && opt.ell >= 3) || opt.show == "lm") out["lm"] = bij_lm_section(lam, opt.ell);
    emit(out);
    return 0;
}

int run_count(const Options& opt) {
    std::vector<std::pair<int, cc::BigInt>> rows;
    std::string label = "k";
    if (opt.what == "cores") {
        for (int k = 0; k <= opt.upto; ++k) rows.push_back({k, cc::core_count(opt.ell, k)});
    } else if (opt.what == "lpartitions" && opt.core_text.empty()) {
        cc::IntSeries gf = cc::lpartition_gf(opt.ell, opt.upto);
        for (int k = 0; k <= opt.upto; ++k) rows.push_back({k, gf[k]});
    } else {
        if (opt.core_text.empty())
            cc::fail("invalid-core", "--what jm needs --core");
        cc::Partition core = cc::Partition::parse(opt.core_text);
        label = "w";
        auto count = [&](int w) {
            return opt.what == "jm" ? cc::count_jm_core_weight(core, opt.ell, w)
                                    : cc::count_lpartitions_core_weight(core, opt.ell, w);
        };
        if (opt.weight >= 0)
            rows.push_back({opt.weight, count(opt.weight)});
        else
            for (int w = 0; w <= opt.upto; ++w) rows.push_back({w, count(w)});
    }
    if (opt.as_json) {
        json out;
        out["what"] = opt.what;
        out["l"] = opt.ell;
        if (!opt.core_text.empty())
            out["core"] = parts_json(cc::Partition::parse(opt.core_text));
        json counts = json::array();
        for (auto& [k, v] : rows) counts.push_back(json::array({k, bigint_json(v)}));
        out["counts"] = counts;
        emit(out);
        return 0;
    }
    std::size_t width = label.size();
    for (auto& [k, v] : rows) width = std::max(width, std::to_string(k).size());
    std::cout << label << std::string(width + 2 - label.size(), ' ') << "count\n";
    for (auto& [k, v] : rows) {
        std::string key = std::to_string(k);
        std::cout << key << std::string(width + 2 - key.size(), ' ') << v.str() << "\n";
    }
    return 0;
}

int run_reg(const Options& opt) {
    cc::Partition lam = cc::Partition::parse(opt.partition_text);
    if (opt.op == "lock") {
        std::cout << cc::render_locks(lam, opt.ell);
        return 0;
    }
    json out;
    out["op"] = opt.op;
    out["l"] = opt.ell;
    out["partition"] = parts_json(lam);
    if (opt.op == "R") {
        out["result"] = parts_json(cc::regularize(lam, opt.ell));
    } else if (opt.op == "S") {
        out["result"] = parts_json(cc::deregularize(lam, opt.ell));
    } else {  // class
        std::vector<cc::Partition> cls;
        if (opt.jobs <= 1) {
            cls = cc::regularization_class(lam, opt.ell);
        } else {
            // Shard the partition stream; the merged result keeps the
            // enumeration order, so output is identical to the serial path.
            int cap = cc::default_enumeration_cap();
            if (lam.size() > cap)
                cc::fail("size-limit-exceeded", "|lambda| exceeds cap");
            cc::Partition target = cc::regularize(lam, opt.ell);
            std::vector<cc::Partition> all = cc::partitions_of(lam.size());
            std::vector<char> keep(all.size(), 0);
            std::vector<std::thread> pool;
            for (int t = 0; t < opt.jobs; ++t)
                pool.emplace_back([&, t] {
                    for (std::size_t j = static_cast<std::size_t>(t); j < all.size();
                         j += static_cast<std::size_t>(opt.jobs))
                        keep[j] = cc::regularize(all[j], opt.ell) == target;
                });
            for (auto& th : pool) th.join();
            for (std::size_t j = 0; j < all.size(); ++j)
                if (keep[j]) cls.push_back(all[j]);
        }
        json arr = json::array();
        for (const cc::Partition& mu : cls) arr.push_back(parts_json(mu));
        out["result"] = arr;
    }
    emit(out);
    return 0;
}

int run_abacus(const Options& opt) {
    cc::Partition lam = cc::Partition::parse(opt.partition_text);
    cc::Abacus abacus(opt.ell, lam, lam.length());
    if (opt.show_abacus) {
        std::cout << cc::render_abacus(abacus);
        return 0;
    }
    json out;
    out["l"] = opt.ell;
    json beads = json::array();
    for (int i = 1; i <= lam.length(); ++i) beads.push_back(abacus.bead(i));
    out["beads"] = beads;
    emit(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partition combinatorics: cores, crystals, and the core bijection"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--jobs", opt.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

    auto add_l = [&](CLI::App* cmd, int minimum) {
        cmd->add_option("--l", opt.ell, "modulus")->required()->check(CLI::Range(minimum, 1000));
    };

    CLI::App* classify = app.add_subcommand("classify", "classify a partition");
    add_l(classify, 2);
    classify->add_option("--partition", opt.partition_text, "partition text")->required();

    CLI::App* crystal = app.add_subcommand("crystal", "generate a crystal graph");
    add_l(crystal, 2);
    crystal->add_option("--variant", opt.variant)
        ->required()
        ->check(CLI::IsMember({"classical", "ladder"}));
    crystal->add_option("--levels", opt.levels)->required()->check(CLI::NonNegativeNumber);
    crystal->add_option("--format", opt.format)->check(CLI::IsMember({"json", "dot"}));

    CLI::App* bij = app.add_subcommand("bij", "the core bijection, four ways");
    add_l(bij, 2);
    bij->add_option("--partition", opt.partition_text)->required();
    bij->add_flag("--inverse", opt.inverse);
    bij->add_option("--k", opt.k)->check(CLI::NonNegativeNumber);
    bij->add_option("--show", opt.show)
        ->check(CLI::IsMember({"abacus", "rows", "geometry", "word", "lm"}));

    CLI::App* count = app.add_subcommand("count", "exact counts");
    add_l(count, 2);
    count->add_option("--what", opt.what)
        ->required()
        ->check(CLI::IsMember({"cores", "lpartitions", "jm"}));
    count->add_option("--upto", opt.upto)->check(CLI::NonNegativeNumber);
    count->add_option("--core", opt.core_text);
    count->add_option("--weight", opt.weight)->check(CLI::NonNegativeNumber);
    count->add_flag("--json", opt.as_json);

    CLI::App* reg = app.add_subcommand("reg", "regularization operators");
    add_l(reg, 2);
    reg->add_option("--op", opt.op)->required()->check(CLI::IsMember({"R", "S", "class", "lock"}));
    reg->add_option("--partition", opt.partition_text)->required();

    CLI::App* abacus = app.add_subcommand("abacus", "abacus of a partition");
    add_l(abacus, 2);
    abacus->add_option("--partition", opt.partition_text)->required();
    abacus->add_flag("--show-abacus", opt.show_abacus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) return run_classify(opt);
        if (crystal->parsed()) return run_crystal(opt);
        if (bij->parsed()) return run_bij(opt);
        if (count->parsed()) return run_count(opt);
        if (reg->parsed()) return run_reg(opt);
        if (abacus->parsed()) return run_abacus(opt);
    } catch (const cc::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == "invalid-partition" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
