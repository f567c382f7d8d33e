#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ohdet/contributor.hpp"
#include "ohdet/exact.hpp"
#include "ohdet/incidence.hpp"
#include "ohdet/maxdet.hpp"
#include "ohdet/reconstruct.hpp"
#include "ohdet/transforms.hpp"

using json = nlohmann::json;
using namespace ohdet;

namespace {

// exit codes: 0 ok, 1 usage/input, 2 identity-check failure, 3 budget
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::string format = "text";
    std::uint64_t budget = kDefaultBudget;
    int workers = 1;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> one_based(const std::vector<int>& xs) {
    std::vector<int> out;
    out.reserve(xs.size());
    for (int x : xs) out.push_back(x + 1);
    return out;
}

json tally_to_json(const ClassTally& t, int n) {
    json j;
    j["n"] = n;
    j["identifier"] = t.class_id.identifier
                          ? json(one_based(t.class_id.identifier->images()))
                          : json(one_based(t.class_id.tail));
    j["edge_monic"] = t.class_id.edge_monic;
    j["pos"] = t.pos_count;
    j["neg"] = t.neg_count;
    j["sum"] = t.signed_sum;
    return j;
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump() << '\n';
    else
        std::cout << text;
}

int budget_exceeded(const Options& opt, const BudgetExceeded& b) {
    json j;
    j["error"] = "budget exceeded";
    j["required_contributors"] = b.required.get_str();
    emit(opt, j, "error: budget exceeded, would visit " + b.required.get_str() +
                     " contributors\n");
    return kExitBudget;
}

int cmd_det(const Options& opt, const std::string& path) {
    IncidenceStructure H = parse_matrix(read_input(path));
    DerivedMatrices d = derived_matrices(H);
    mpz_class det_l = exact_determinant(d.laplacian);

    json j;
    std::ostringstream text;
    j["n_vertices"] = H.n_vertices();
    j["n_edges"] = H.n_edges();
    j["det_laplacian"] = det_l.get_str();
    text << "det(L) = " << det_l << '\n';

    bool square = H.n_vertices() == H.n_edges();
    mpz_class det_h;
    if (square) {
        det_h = exact_determinant(H);
        j["det"] = det_h.get_str();
        text << "det(H) = " << det_h << '\n';
    }

    if (!H.is_full()) {
        j["full"] = false;
        text << "structure is not n-full; contributor expansion skipped\n";
        emit(opt, j, text.str());
        return kExitOk;
    }
    j["full"] = true;

    auto res = laplacian_det_via_contributors(H, opt.budget, opt.workers);
    if (auto* b = std::get_if<BudgetExceeded>(&res)) return budget_exceeded(opt, *b);
    const auto& r = std::get<ContributorDetResult>(res);
    bool agree = mpz_class(r.det_laplacian) == det_l &&
                 mpz_class(r.det_laplacian) == det_h * det_h;
    j["det_contributors"] = r.det_laplacian;
    j["contributors_visited"] = r.contributors_visited;
    j["agreement"] = agree;
    text << "contributor det(L) = " << r.det_laplacian << " (" << r.contributors_visited
         << " contributors visited)\n"
         << "agreement: " << (agree ? "true" : "false") << '\n';
    emit(opt, j, text.str());
    return agree ? kExitOk : kExitCheckFailed;
}

int cmd_classes(const Options& opt, const std::string& path, const std::string& cls) {
    IncidenceStructure H = parse_matrix(read_input(path));
    const int n = H.n_vertices();
    if (!cls.empty()) {
        Permutation alpha = Permutation::from_cycle_string(cls, n);
        auto m = det_magnitude_single_class(H, alpha);
        json j = tally_to_json(m.tally, n);
        j["magnitude"] = m.magnitude;
        j["identities_hold"] = m.identities_hold;
        std::ostringstream text;
        text << "class " << alpha.to_cycle_string() << ": pos " << m.tally.pos_count
             << ", neg " << m.tally.neg_count << ", sum " << m.tally.signed_sum
             << ", |sum| = " << m.magnitude << '\n'
             << "corollary identities: " << (m.identities_hold ? "hold" : "FAIL") << '\n';
        emit(opt, j, text.str());
        return m.identities_hold ? kExitOk : kExitCheckFailed;
    }

    AllClassesResult all = class_tallies_all(H, opt.workers);
    json j;
    j["n"] = n;
    j["classes"] = json::array();
    for (const auto& t : all.tallies) j["classes"].push_back(tally_to_json(t, n));
    j["plus_classes"] = all.plus_classes;
    j["minus_classes"] = all.minus_classes;
    j["det_magnitude"] = all.det_magnitude;
    j["det_laplacian"] = all.laplacian_det;
    j["degenerate"] = all.degenerate;
    j["identities_hold"] = all.identities_hold;

    std::ostringstream text;
    for (const auto& t : all.tallies)
        text << "class " << (t.class_id.identifier ? t.class_id.identifier->to_cycle_string()
                                                   : std::string("?"))
             << ": sum " << t.signed_sum << " (pos " << t.pos_count << ", neg "
             << t.neg_count << ")\n";
    text << "plus classes " << all.plus_classes << ", minus classes " << all.minus_classes
         << ", |det| = " << all.det_magnitude << ", det(L) = " << all.laplacian_det << '\n';
    if (all.degenerate) text << "determinant is zero: class-count identities do not apply\n";
    text << "identities: " << (all.identities_hold ? "hold" : "FAIL") << '\n';
    emit(opt, j, text.str());
    return all.identities_hold ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& opt, const std::string& path) {
    IncidenceStructure H = parse_matrix(read_input(path));
    auto res = verify_nonmonic_zero(H, opt.budget);
    if (auto* b = std::get_if<BudgetExceeded>(&res)) return budget_exceeded(opt, *b);
    const auto& r = std::get<NonMonicReport>(res);
    json j;
    j["classes_checked"] = r.classes_checked;
    j["all_zero"] = r.all_zero;
    j["pairing_holds"] = r.pairing_holds;
    j["case1_pairs"] = r.case1_pairs;
    j["case2_pairs"] = r.case2_pairs;
    if (r.witness) {
        j["witness"] = {{"tail", one_based(r.witness->tail)},
                        {"v", r.witness->v + 1},
                        {"w", r.witness->w + 1}};
    }
    std::ostringstream text;
    text << r.classes_checked << " non-edge-monic classes checked\n"
         << "all class sums zero: " << (r.all_zero ? "true" : "false") << '\n'
         << "transposition pairing holds: " << (r.pairing_holds ? "true" : "false") << '\n';
    emit(opt, j, text.str());
    return r.all_zero && r.pairing_holds ? kExitOk : kExitCheckFailed;
}

int cmd_reduce(const Options& opt, const std::string& path) {
    IncidenceStructure H = parse_matrix(read_input(path));
    Standardization S = standardize(H);
    Reduction R = reduce_to_01(S);
    json j;
    j["h_std"] = serialize_matrix(S.h_std);
    j["row_signs"] = S.row_signs;
    j["col_signs"] = S.col_signs;
    j["h_prime"] = serialize_matrix(R.h_prime);
    j["det_h"] = R.det_h.get_str();
    j["det_h_prime"] = R.det_h_prime.get_str();
    j["relation_check"] = R.relation_check;
    j["pivot_check"] = R.pivot_check;

    const int n = H.n_vertices();
    mpz_class lhs = abs(R.det_h);
    std::ostringstream text;
    text << "standardized:\n" << serialize_matrix(S.h_std)
         << "reduced {0,1} matrix:\n" << serialize_matrix(R.h_prime)
         << lhs << " = 2^" << n - 1 << " * " << abs(R.det_h_prime) << '\n'
         << "checks: " << (R.relation_check && R.pivot_check ? "pass" : "FAIL") << '\n';
    emit(opt, j, text.str());
    return R.relation_check && R.pivot_check ? kExitOk : kExitCheckFailed;
}

int cmd_probe(const Options& opt, const std::string& path) {
    IncidenceStructure H = parse_matrix(read_input(path));
    if (!H.is_standardized()) {
        std::cerr << "note: standardizing input first\n";
        H = standardize(H).h_std;
    }
    SignProbe p = probe_signs(H);
    if (opt.format == "json") {
        std::cout << p.to_json() << '\n';
    } else {
        std::cout << "n = " << p.n << ", probes = " << p.probe_count() << '\n'
                  << p.to_json() << '\n';
    }
    return kExitOk;
}

int cmd_reconstruct(const Options& opt, const std::string& probe_path) {
    SignProbe p = SignProbe::from_json(read_input(probe_path));
    IncidenceStructure H = reconstruct(p);
    SignProbe round = probe_signs(H);
    bool ok = round == p;
    if (opt.format == "json") {
        json j;
        j["matrix"] = serialize_matrix(H);
        j["round_trip"] = ok;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << serialize_matrix(H)
                  << "round trip: " << (ok ? "pass" : "FAIL") << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
}

json search_to_json(const SearchResult& r) {
    json j;
    j["n"] = r.n;
    j["best_magnitude"] = r.best_magnitude.get_str();
    j["visited"] = r.visited;
    j["n_pow_n"] = r.n_pow_n.get_str();
    j["hadamard_ok"] = r.hadamard_ok;
    j["heuristic"] = r.heuristic;
    if (r.heuristic) j["id_class_neg_count"] = r.id_class_neg_count;
    j["cross_check_ok"] = r.cross_check_ok;
    j["witnesses"] = json::array();
    for (const auto& w : r.witnesses) j["witnesses"].push_back(serialize_matrix(w));
    return j;
}

int cmd_search(const Options& opt, int n, bool local, std::uint64_t seed,
               std::uint64_t budget, int cap) {
    SearchResult r;
    try {
        r = local ? local_search_maxdet(n, seed, budget)
                  : exhaustive_maxdet(n, opt.workers, cap);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    }
    std::ostringstream text;
    text << "n = " << r.n << ", best |det| = " << r.best_magnitude
         << (r.heuristic ? " (heuristic - not proven optimal)" : "") << '\n'
         << "candidates visited: " << r.visited << '\n'
         << "witnesses: " << r.witnesses.size() << '\n';
    if (!r.witnesses.empty()) text << serialize_matrix(r.witnesses.front());
    text << "hadamard bound best^2 <= n^n: " << (r.hadamard_ok ? "holds" : "FAIL") << '\n';
    emit(opt, search_to_json(r), text.str());
    return r.hadamard_ok && r.cross_check_ok ? kExitOk : kExitCheckFailed;
}

int cmd_experiment(const Options& opt, int n, int cap) {
    ForcedSignReport rep;
    try {
        rep = forced_sign_experiment(n, cap);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    }
    json j;
    j["n"] = rep.n;
    j["exhaustive_maximum"] = rep.exhaustive_maximum.get_str();
    j["rows"] = json::array();
    std::ostringstream text;
    text << "exhaustive maximum |det| at n = " << rep.n << ": "
         << rep.exhaustive_maximum << '\n';
    for (const auto& row : rep.rows) {
        j["rows"].push_back({{"target_sign", row.target_sign},
                             {"matrix", serialize_matrix(row.matrix)},
                             {"magnitude", row.magnitude.get_str()},
                             {"attains_maximum", row.attains_maximum}});
        text << "uniform probe sign " << (row.target_sign > 0 ? "+1" : "-1")
             << ": |det| = " << row.magnitude
             << (row.attains_maximum ? " (attains maximum)" : "") << '\n';
    }
    j["any_uniform_attains"] = rep.any_uniform_attains;
    text << "observation: "
         << (rep.any_uniform_attains ? "a uniform pattern attains the maximum"
                                     : "no uniform pattern attains the maximum")
         << " at this n\n";
    emit(opt, j, text.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact contributor-expansion determinants of {+-1}-matrices"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget", opt.budget, "max contributors to visit");
    app.add_option("--workers", opt.workers, "worker threads")->check(CLI::PositiveNumber);

    std::string path = "-", cls, probe_path;
    int n = 3, cap = 5;
    bool local = false;
    std::uint64_t seed = 0, search_budget = 100000;

    auto* det = app.add_subcommand("det", "determinants via oracle and contributors");
    det->add_option("matrix", path, "matrix file or - for stdin");
    auto* classes = app.add_subcommand("classes", "edge-monic class tallies");
    classes->add_option("matrix", path);
    classes->add_option("--class", cls, "identifier in cycle notation, e.g. \"(1 2 3)\"");
    auto* verify = app.add_subcommand("verify", "non-edge-monic vanishing report");
    verify->add_option("matrix", path);
    auto* reduce = app.add_subcommand("reduce", "standardize and reduce to {0,1}");
    reduce->add_option("matrix", path);
    auto* probe = app.add_subcommand("probe", "probe-contributor signs");
    probe->add_option("matrix", path);
    auto* reconstruct = app.add_subcommand("reconstruct", "matrix from probe signs");
    reconstruct->add_option("--probe", probe_path, "probe JSON file")->required();
    auto* search = app.add_subcommand("search", "maximum-determinant search");
    search->add_option("n", n, "matrix size");
    search->add_flag("--local", local, "hill climbing instead of exhaustive");
    search->add_option("--seed", seed, "RNG seed for --local");
    search->add_option("--search-budget", search_budget, "evaluations for --local");
    search->add_option("--cap", cap, "exhaustive size cap");
    auto* experiment = app.add_subcommand("experiment", "uniform forced-sign probes");
    experiment->add_option("n", n, "matrix size");
    experiment->add_option("--cap", cap, "exhaustive size cap");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();  // accept --format/--workers/--budget after the subcommand

    CLI11_PARSE(app, argc, argv);

    try {
        if (*det) return cmd_det(opt, path);
        if (*classes) return cmd_classes(opt, path, cls);
        if (*verify) return cmd_verify(opt, path);
        if (*reduce) return cmd_reduce(opt, path);
        if (*probe) return cmd_probe(opt, path);
        if (*reconstruct) return cmd_reconstruct(opt, probe_path);
        if (*search) return cmd_search(opt, n, local, seed, search_budget, cap);
        if (*experiment) return cmd_experiment(opt, n, cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
