#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qlab/braid.hpp"
#include "qlab/coloring.hpp"
#include "qlab/congruence.hpp"
#include "qlab/constructions.hpp"
#include "qlab/errors.hpp"
#include "qlab/extension.hpp"
#include "qlab/homology.hpp"
#include "qlab/invariant.hpp"
#include "qlab/io.hpp"
#include "qlab/isomorphism.hpp"

namespace fs = std::filesystem;
using namespace qlab;

namespace {

Quandle load_quandle(const std::string& path, bool transposed_flag) {
    return read_quandle(path, transposed_flag || rig_transposed_env());
}

std::string stem_of(const std::string& path) {
    return fs::path(path).stem().string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string flag_word(bool v) { return v ? "yes" : "no"; }

// ---- quandle group ----------------------------------------------------

void cmd_quandle_check(const std::string& file, bool transposed) {
    Quandle X = load_quandle(file, transposed);
    std::string out = "valid";
    if (is_connected(X)) out += ", connected";
    if (is_faithful(X)) out += ", faithful";
    if (is_kei(X)) out += ", kei";
    std::cout << out << "\n";
}

void cmd_quandle_info(const std::string& file, bool transposed) {
    Quandle X = load_quandle(file, transposed);
    std::cout << "order: " << X.size() << "\n";
    std::cout << "connected: " << flag_word(is_connected(X)) << "\n";
    std::cout << "faithful: " << flag_word(is_faithful(X)) << "\n";
    std::cout << "kei: " << flag_word(is_kei(X)) << "\n";
    std::cout << "latin: " << flag_word(is_latin(X)) << "\n";
    std::cout << "homogeneous: " << flag_word(is_homogeneous(X)) << "\n";
    std::cout << "inner group order: " << inner_group(X).order() << "\n";
}

void cmd_quandle_iso(const std::string& a, const std::string& b, bool transposed) {
    Quandle A = load_quandle(a, transposed);
    Quandle B = load_quandle(b, transposed);
    auto f = find_isomorphism(A, B);
    if (!f) {
        std::cout << "not isomorphic\n";
        return;
    }
    std::cout << "isomorphic: [";
    for (size_t i = 0; i < f->size(); ++i) std::cout << (i ? "," : "") << (*f)[i] + 1;
    std::cout << "]\n";
}

void cmd_quandle_quotients(const std::string& file, bool transposed) {
    Quandle X = load_quandle(file, transposed);
    std::cout << "congruences: " << congruences(X).size() << "\n";
    std::vector<Quandle> qs = proper_quotients(X);
    std::cout << "proper quotient orders:";
    if (qs.empty()) std::cout << " none";
    for (const Quandle& q : qs) std::cout << " " << q.size();
    std::cout << "\n";
}

void cmd_quandle_make(const std::string& kind, const std::vector<std::string>& args,
                      const std::string& out, bool transposed) {
    auto need = [&](size_t k) {
        if (args.size() != k)
            throw ParseError("make " + kind + " expects " + std::to_string(k) + " arguments");
    };
    auto num = [&](size_t i) {
        try {
            return std::stoi(args[i]);
        } catch (const std::exception&) {
            throw ParseError("make: bad integer `" + args[i] + "`");
        }
    };
    std::unique_ptr<Quandle> X;
    if (kind == "trivial") {
        need(1);
        X = std::make_unique<Quandle>(trivial_quandle(num(0)));
    } else if (kind == "dihedral") {
        need(1);
        X = std::make_unique<Quandle>(dihedral_quandle(num(0)));
    } else if (kind == "alexander") {
        need(2);
        X = std::make_unique<Quandle>(alexander_quandle(num(0), num(1)));
    } else if (kind == "product") {
        need(2);
        X = std::make_unique<Quandle>(
            product_quandle(load_quandle(args[0], transposed), load_quandle(args[1], transposed)));
    } else if (kind == "dual") {
        need(1);
        X = std::make_unique<Quandle>(dual_quandle(load_quandle(args[0], transposed)));
    } else {
        throw ParseError("unknown make kind `" + kind +
                         "` (trivial|dihedral|alexander|product|dual)");
    }
    if (out.empty()) {
        std::cout << X->size() << "\n";
        for (int a = 0; a < X->size(); ++a) {
            for (int b = 0; b < X->size(); ++b) std::cout << (b ? " " : "") << X->op(a, b) + 1;
            std::cout << "\n";
        }
    } else {
        write_quandle(out, *X);
        std::cout << "wrote " << out << "\n";
    }
}

// ---- cohomology --------------------------------------------------------

void cmd_cohomology(const std::string& file, const std::string& coeff, const std::string& basis_out,
                    bool transposed) {
    Quandle X = load_quandle(file, transposed);
    AbelianGroup A = AbelianGroup::parse(coeff);
    CohomologyResult res = h2_cohomology(X, A);
    std::cout << res.structure.format() << "\n";

    AbelianGroupStructure integral = h2_integral(X);
    std::cout << "integral: " << integral.format() << "\n";

    std::vector<std::int64_t> predicted;
    for (std::int64_t d : A.moduli())
        for (std::int64_t f : predicted_mod_structure(integral, d)) predicted.push_back(f);
    predicted = normalize_invariant_factors(std::move(predicted));
    if (predicted == res.structure.torsion) {
        std::cout << "cross-check: ok\n";
    } else {
        std::cout << "cross-check: MISMATCH computed=[";
        for (size_t i = 0; i < res.structure.torsion.size(); ++i)
            std::cout << (i ? "," : "") << res.structure.torsion[i];
        std::cout << "] predicted=[";
        for (size_t i = 0; i < predicted.size(); ++i) std::cout << (i ? "," : "") << predicted[i];
        std::cout << "]\n";
    }

    if (!basis_out.empty()) {
        if (res.basis.empty()) {
            std::cout << "no basis (trivial)\n";
        } else {
            write_cocycle(basis_out, res.basis.back());
            std::cout << "basis written: " << basis_out << " (order "
                      << res.structure.torsion.back() << ")\n";
        }
    }
}

// ---- extend / detect ----------------------------------------------------

void cmd_extend(const std::vector<std::string>& inputs, const std::string& out,
                const std::string& descriptor_out, bool transposed) {
    std::string base_path, coc_path;
    if (inputs.size() == 1) {
        ExtensionDescriptor d = read_descriptor(inputs[0]);
        base_path = d.base;
        coc_path = d.cocycle;
        Cocycle probe = read_cocycle(coc_path);
        if (probe.A != AbelianGroup::parse(d.group))
            throw ModulusMismatch("descriptor group does not match cocycle file");
    } else {
        base_path = inputs[0];
        coc_path = inputs[1];
    }
    Quandle X = load_quandle(base_path, transposed);
    Cocycle phi = read_cocycle(coc_path);
    AbelianExtension E = abelian_extension(X, phi.A, phi);
    std::cout << "order " << E.total.size() << ", " << (is_connected(E.total) ? "connected" : "disconnected")
              << ", " << (is_faithful(E.total) ? "faithful" : "non-faithful") << "\n";
    if (!out.empty()) {
        write_quandle(out, E.total);
        std::cout << "wrote " << out << "\n";
    }
    if (!descriptor_out.empty()) {
        write_descriptor(descriptor_out,
                         ExtensionDescriptor{base_path, phi.A.format(), coc_path});
        std::cout << "wrote " << descriptor_out << "\n";
    }
}

void cmd_detect(const std::string& file, const std::string& base_out, const std::string& coc_out,
                bool transposed) {
    Quandle Y = load_quandle(file, transposed);
    DetectionResult res = [&] {
        try {
            return detect_abelian_extension(Y);
        } catch (const IsFaithful& e) {
            std::cout << e.what() << "\n";
            std::exit(0);
        }
    }();
    if (res.abelian) {
        const AbelianExtension& E = res.abelian->extension;
        std::cout << "abelian extension: base order " << E.base.size() << ", A=Z"
                  << E.coefficients.order() << "\n";
        if (!base_out.empty()) {
            write_quandle(base_out, E.base);
            std::cout << "wrote " << base_out << "\n";
        }
        if (!coc_out.empty()) {
            write_cocycle(coc_out, E.cocycle);
            std::cout << "wrote " << coc_out << "\n";
        }
    } else {
        std::cout << "constant cocycle: base order " << res.constant.base.size() << ", fiber "
                  << res.constant.fiber << ", H_beta order " << h_beta(res.constant).order()
                  << "\n";
        if (!base_out.empty()) {
            write_quandle(base_out, res.constant.base);
            std::cout << "wrote " << base_out << "\n";
        }
    }
}

// ---- color ----------------------------------------------------------------

void cmd_color(const std::string& file, const std::string& braid_text, int fixed,
               const std::string& composite, const std::string& composite_mirror,
               const std::string& catalog, bool transposed) {
    Quandle X = load_quandle(file, transposed);
    std::vector<std::pair<std::string, BraidWord>> jobs;
    if (!catalog.empty())
        for (KnotEntry& e : load_catalog(catalog)) jobs.emplace_back(e.name, std::move(e.braid));
    if (!braid_text.empty()) jobs.emplace_back("", parse_braid(braid_text));
    if (jobs.empty()) throw ParseError("color needs a braid word or --catalog");

    for (const auto& [name, w] : jobs) {
        std::vector<BraidWord> words;
        if (!composite.empty()) words.push_back(connect_sum(parse_braid(composite), w));
        if (!composite_mirror.empty())
            words.push_back(connect_sum(parse_braid(composite_mirror), reverse_mirror(w)));
        if (words.empty()) words.push_back(w);
        for (const BraidWord& job : words) {
            long long c = fixed > 0 ? count_colorings_fixed(X, fixed - 1, job)
                                    : count_colorings(X, job);
            if (name.empty())
                std::cout << c << "\n";
            else
                std::cout << name << " " << c << "\n";
        }
    }
}

// ---- invariant -------------------------------------------------------------

void cmd_invariant(const std::string& file, const std::string& coc_path,
                   const std::string& braid_text, const std::string& recover_path,
                   const std::string& batch, const std::string& out_path, bool json,
                   bool transposed) {
    Quandle X = load_quandle(file, transposed);
    Cocycle phi = read_cocycle(coc_path);
    if (phi.n != X.size()) throw ShapeError("cocycle size does not match quandle");

    auto compute = [&](const BraidWord& w) -> GroupRingElement {
        if (recover_path.empty()) return cocycle_invariant(X, phi, w);
        AbelianExtension E = abelian_extension(X, phi.A, phi);
        return recover_invariant(E.total, X, phi.A, read_anchors(recover_path), w);
    };

    if (!batch.empty()) {
        std::ostringstream csv;
        csv << "knot;quandle;cocycle;polynomial\n";
        for (const KnotEntry& e : load_catalog(batch))
            csv << e.name << ";" << stem_of(file) << ";" << stem_of(coc_path) << ";"
                << compute(e.braid).polynomial() << "\n";
        if (out_path.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw ParseError("cannot write " + out_path);
            f << csv.str();
            std::cout << "wrote " << out_path << "\n";
        }
        return;
    }

    if (braid_text.empty()) throw ParseError("invariant needs a braid word or --batch");
    GroupRingElement z = compute(parse_braid(braid_text));
    if (json) {
        nlohmann::json j{{"braid", braid_text},
                         {"group", z.group().format()},
                         {"value", z.display()},
                         {"polynomial", z.polynomial()},
                         {"mass", z.mass()},
                         {"asymmetric", is_asymmetric(z)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << z.display() << "\n";
    }
}

// ---- scan -------------------------------------------------------------------

void cmd_scan(const std::string& quandle_dir, const std::string& knots_file,
              const std::string& rm_braid, const std::string& cache_dir,
              const std::string& out_path, bool transposed) {
    std::vector<std::string> qfiles;
    for (const auto& entry : fs::directory_iterator(quandle_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".qnd")
            qfiles.push_back(entry.path().string());
    std::sort(qfiles.begin(), qfiles.end());

    std::string key_material = "qlab-scan-v1\n";
    for (const std::string& q : qfiles) key_material += q + "\n" + read_file(q) + "\n";
    key_material += read_file(knots_file) + "\n" + rm_braid + "\n";
    char key[17];
    std::snprintf(key, sizeof key, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(key_material)));

    auto emit = [&](const std::string& text) {
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw ParseError("cannot write " + out_path);
            f << text;
        }
    };

    fs::path cache_file = fs::path(cache_dir) / (std::string(key) + ".json");
    if (fs::exists(cache_file)) {
        emit(read_file(cache_file.string()));
        std::cerr << "cache: hit " << key << "\n";
        return;
    }

    std::vector<KnotEntry> knots = load_catalog(knots_file);
    nlohmann::json report;
    report["cells"] = nlohmann::json::array();
    report["rm"] = nlohmann::json::array();
    for (const std::string& qf : qfiles) {
        Quandle X = load_quandle(qf, transposed);
        for (const KnotEntry& e : knots) {
            nlohmann::json cell{{"quandle", stem_of(qf)},
                                {"knot", e.name},
                                {"colorings", count_colorings(X, e.braid)}};
            report["cells"].push_back(std::move(cell));
            if (!rm_braid.empty()) {
                BraidWord R = parse_braid(rm_braid);
                long long left = count_colorings(X, connect_sum(R, e.braid));
                long long right = count_colorings(X, connect_sum(R, reverse_mirror(e.braid)));
                report["rm"].push_back(nlohmann::json{{"quandle", stem_of(qf)},
                                                      {"knot", e.name},
                                                      {"left", left},
                                                      {"right", right},
                                                      {"distinguished", left != right}});
            }
        }
    }
    std::string text = report.dump(2) + "\n";
    fs::create_directories(cache_dir);
    {
        std::ofstream f(cache_file, std::ios::binary);
        if (!f) throw ParseError("cannot write cache file " + cache_file.string());
        f << text;
    }
    emit(text);
    std::cerr << "cache: stored " << key << "\n";
}

// ---- experiment --------------------------------------------------------------

void cmd_experiment_kei(const std::string& file, std::int64_t d, bool transposed) {
    Quandle X = load_quandle(file, transposed);
    if (!is_kei(X)) {
        std::cout << "base is not a kei; criterion does not apply\n";
        return;
    }
    std::vector<Cocycle> all = all_cocycles_mod(X, d);
    int preserving = 0, nontrivial_preserving = 0;
    for (const Cocycle& c : all) {
        if (!kei_extension_check(X, c)) continue;
        ++preserving;
        if (!is_coboundary(X, c)) ++nontrivial_preserving;
    }
    std::cout << "cocycles: " << all.size() << ", kei-preserving: " << preserving
              << ", kei-preserving outside the trivial class: " << nontrivial_preserving << "\n";
    std::cout << "kei extension beyond coboundaries on this instance: "
              << (nontrivial_preserving ? "yes" : "no") << "\n";
}

void cmd_experiment_tower(const std::string& file, const std::string& coeff, bool transposed) {
    Quandle X = load_quandle(file, transposed);
    AbelianGroup A = AbelianGroup::parse(coeff);
    CohomologyResult res = h2_cohomology(X, A);
    if (res.structure.trivial()) {
        std::cout << "H2 trivial; no tower from this coefficient group\n";
        return;
    }
    Cocycle phi = res.basis.back();
    AbelianExtension E = abelian_extension(X, A, phi);
    std::cout << "base " << X.size() << " -> total " << E.total.size() << " (connected "
              << flag_word(is_connected(E.total)) << ")\n";

    // one subgroup per distinct cyclic subgroup of A
    std::vector<std::vector<std::int64_t>> seen_orbits;
    for (std::int64_t r = 1; r < A.order(); ++r) {
        AbelianGroup::Elem g = A.unrank(r);
        std::vector<std::int64_t> orbit;
        AbelianGroup::Elem acc = A.zero();
        do {
            acc = A.add(acc, g);
            orbit.push_back(A.rank(acc));
        } while (!A.is_zero(acc));
        std::sort(orbit.begin(), orbit.end());
        if (static_cast<std::int64_t>(orbit.size()) == A.order()) continue;  // C = A
        if (std::find(seen_orbits.begin(), seen_orbits.end(), orbit) != seen_orbits.end())
            continue;
        seen_orbits.push_back(orbit);
        TowerDecomposition t = tower_decompose(X, A, phi, {g});
        std::cout << "subgroup <rank " << r << "> order " << t.top.coefficients.order()
                  << ": middle " << t.middle.total.size() << " (connected "
                  << flag_word(is_connected(t.middle.total)) << "), top " << t.top.total.size()
                  << " iso to total: " << flag_word(are_isomorphic(t.top.total, E.total).has_value()) << "\n";
    }
    AbelianGroupStructure up = h2_integral(E.total);
    std::cout << "H2(total) integral: " << up.format()
              << (up.trivial() ? " (tower stops here)" : " (tower can continue)") << "\n";
}

void cmd_experiment_iso(const std::string& file, std::int64_t d, bool transposed) {
    Quandle X = load_quandle(file, transposed);
    std::vector<Cocycle> all = all_cocycles_mod(X, d);
    std::vector<Cocycle> reps;
    for (const Cocycle& c : all) {
        bool fresh = true;
        for (const Cocycle& r : reps)
            if (cohomologous(X, r, c)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(c);
    }
    std::cout << "cocycles: " << all.size() << ", classes: " << reps.size() << "\n";
    AbelianGroup A({d});
    std::vector<Quandle> exts;
    exts.reserve(reps.size());
    for (const Cocycle& r : reps) exts.push_back(abelian_extension(X, A, r).total);
    bool found = false;
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            if (are_isomorphic(exts[i], exts[j])) {
                std::cout << "non-cohomologous classes " << i << " and " << j
                          << " give isomorphic extensions\n";
                found = true;
            }
    if (!found) std::cout << "no isomorphic pair among class representatives on this instance\n";
}

void cmd_experiment_form(const std::string& file, const std::string& coc_path,
                         const std::string& catalog, bool transposed) {
    Quandle X = load_quandle(file, transposed);
    Cocycle phi = read_cocycle(coc_path);
    bool all_two_term = true;
    for (const KnotEntry& e : load_catalog(catalog)) {
        GroupRingElement z = cocycle_invariant(X, phi, e.braid);
        int terms = 0;
        for (std::int64_t r = 0; r < z.group().order(); ++r)
            if (z.coefficient(z.group().unrank(r)) != 0) ++terms;
        std::cout << e.name << ": " << z.display() << " [" << terms << " terms]\n";
        if (terms > 2) all_two_term = false;
    }
    std::cout << "all values of two-term form: " << flag_word(all_two_term) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite quandle computations: colorings, cocycle invariants, extensions"};
    app.require_subcommand(1);
    std::ios::sync_with_stdio(false);

    // quandle
    auto* q = app.add_subcommand("quandle", "table predicates and constructions");
    q->require_subcommand(1);
    struct {
        std::string file, other, kind, out;
        std::vector<std::string> args;
        bool transposed = false;
    } qopt;

    auto* qcheck = q->add_subcommand("check", "validate axioms and print flags");
    qcheck->add_option("file", qopt.file)->required();
    qcheck->add_flag("--transposed", qopt.transposed, "ingest transposed matrix");
    qcheck->callback([&] { cmd_quandle_check(qopt.file, qopt.transposed); });

    auto* qinfo = q->add_subcommand("info", "full predicate report");
    qinfo->add_option("file", qopt.file)->required();
    qinfo->add_flag("--transposed", qopt.transposed);
    qinfo->callback([&] { cmd_quandle_info(qopt.file, qopt.transposed); });

    auto* qiso = q->add_subcommand("iso", "isomorphism witness");
    qiso->add_option("a", qopt.file)->required();
    qiso->add_option("b", qopt.other)->required();
    qiso->add_flag("--transposed", qopt.transposed);
    qiso->callback([&] { cmd_quandle_iso(qopt.file, qopt.other, qopt.transposed); });

    auto* qquot = q->add_subcommand("quotients", "congruence lattice and proper quotients");
    qquot->add_option("file", qopt.file)->required();
    qquot->add_flag("--transposed", qopt.transposed);
    qquot->callback([&] { cmd_quandle_quotients(qopt.file, qopt.transposed); });

    auto* qmake = q->add_subcommand("make", "construct a catalog quandle");
    qmake->add_option("kind", qopt.kind, "trivial|dihedral|alexander|product|dual")->required();
    qmake->add_option("args", qopt.args, "constructor arguments");
    qmake->add_option("--out", qopt.out, "write .qnd file");
    qmake->add_flag("--transposed", qopt.transposed);
    qmake->callback([&] { cmd_quandle_make(qopt.kind, qopt.args, qopt.out, qopt.transposed); });

    // cohomology
    struct {
        std::string file, coeff, basis;
        bool transposed = false;
    } copt;
    auto* c = app.add_subcommand("cohomology", "H^2 with finite coefficients");
    c->add_option("file", copt.file)->required();
    c->add_option("coefficients", copt.coeff, "e.g. Z4, 4, 2x2")->required();
    c->add_option("--basis", copt.basis, "write a generating cocycle");
    c->add_flag("--transposed", copt.transposed);
    c->callback([&] { cmd_cohomology(copt.file, copt.coeff, copt.basis, copt.transposed); });

    // extend
    struct {
        std::vector<std::string> inputs;
        std::string out, descriptor;
        bool transposed = false;
    } eopt;
    auto* e = app.add_subcommand("extend", "build an abelian extension");
    e->add_option("inputs", eopt.inputs, "base.qnd cocycle.coc, or descriptor.json")
        ->expected(1, 2)
        ->required();
    e->add_option("--out", eopt.out, "write the total quandle");
    e->add_option("--descriptor", eopt.descriptor, "write a descriptor file");
    e->add_flag("--transposed", eopt.transposed);
    e->callback([&] { cmd_extend(eopt.inputs, eopt.out, eopt.descriptor, eopt.transposed); });

    // detect
    struct {
        std::string file, base_out, coc_out;
        bool transposed = false;
    } dopt;
    auto* det = app.add_subcommand("detect", "recover extension structure");
    det->add_option("file", dopt.file)->required();
    det->add_option("--base", dopt.base_out, "write the detected base quandle");
    det->add_option("--out", dopt.coc_out, "write the detected cocycle");
    det->add_flag("--transposed", dopt.transposed);
    det->callback([&] { cmd_detect(dopt.file, dopt.base_out, dopt.coc_out, dopt.transposed); });

    // color
    struct {
        std::string file, braid, composite, composite_mirror, catalog;
        int fixed = 0;
        bool transposed = false;
    } colopt;
    auto* col = app.add_subcommand("color", "coloring counts of braid closures");
    col->add_option("file", colopt.file)->required();
    col->add_option("braid", colopt.braid, "braid word, e.g. \"[1,1,1]\"");
    col->add_option("--fixed", colopt.fixed, "fix strand 1 color (1-based)");
    col->add_option("--composite", colopt.composite, "count R # K for this R");
    col->add_option("--composite-mirror", colopt.composite_mirror, "count R # rm(K)");
    col->add_option("--catalog", colopt.catalog, "batch over a .knt file");
    col->add_flag("--transposed", colopt.transposed);
    col->callback([&] {
        cmd_color(colopt.file, colopt.braid, colopt.fixed, colopt.composite,
                  colopt.composite_mirror, colopt.catalog, colopt.transposed);
    });

    // invariant
    struct {
        std::string file, coc, braid, recover, batch, out;
        bool json = false, transposed = false;
    } iopt;
    auto* inv = app.add_subcommand("invariant", "cocycle state-sum invariant");
    inv->add_option("file", iopt.file)->required();
    inv->add_option("cocycle", iopt.coc)->required();
    inv->add_option("braid", iopt.braid);
    inv->add_option("--recover", iopt.recover, "compute via anchors JSON and coloring counts");
    inv->add_option("--batch", iopt.batch, "catalog file for CSV output");
    inv->add_option("--out", iopt.out, "CSV destination");
    inv->add_flag("--json", iopt.json);
    inv->add_flag("--transposed", iopt.transposed);
    inv->callback([&] {
        cmd_invariant(iopt.file, iopt.coc, iopt.braid, iopt.recover, iopt.batch, iopt.out,
                      iopt.json, iopt.transposed);
    });

    // scan
    struct {
        std::string dir, knots, rm, cache = ".qlab-cache", out;
        bool transposed = false;
    } sopt;
    auto* scan = app.add_subcommand("scan", "coloring table over quandle dir x knot file");
    scan->add_option("--quandles", sopt.dir)->required();
    scan->add_option("--knots", sopt.knots)->required();
    scan->add_option("--rm-distinguish", sopt.rm, "also compare R#K against R#rm(K)");
    scan->add_option("--cache-dir", sopt.cache, "content-addressed result cache");
    scan->add_option("--out", sopt.out, "write report here instead of stdout");
    scan->add_flag("--transposed", sopt.transposed);
    scan->callback([&] {
        cmd_scan(sopt.dir, sopt.knots, sopt.rm, sopt.cache, sopt.out, sopt.transposed);
    });

    // experiment
    auto* ex = app.add_subcommand("experiment", "open-ended searches, reported not asserted");
    ex->require_subcommand(1);
    struct {
        std::string file, coc, catalog, coeff;
        std::int64_t mod = 2;
        bool transposed = false;
    } xopt;

    auto* xkei = ex->add_subcommand("kei-extensions", "kei criterion census over Z_d cocycles");
    xkei->add_option("file", xopt.file)->required();
    xkei->add_option("modulus", xopt.mod)->required();
    xkei->add_flag("--transposed", xopt.transposed);
    xkei->callback([&] { cmd_experiment_kei(xopt.file, xopt.mod, xopt.transposed); });

    auto* xtow = ex->add_subcommand("tower", "extension towers through subgroups");
    xtow->add_option("file", xopt.file)->required();
    xtow->add_option("coefficients", xopt.coeff)->required();
    xtow->add_flag("--transposed", xopt.transposed);
    xtow->callback([&] { cmd_experiment_tower(xopt.file, xopt.coeff, xopt.transposed); });

    auto* xiso = ex->add_subcommand("iso-noncohomologous",
                                    "isomorphic extensions from distinct classes");
    xiso->add_option("file", xopt.file)->required();
    xiso->add_option("modulus", xopt.mod)->required();
    xiso->add_flag("--transposed", xopt.transposed);
    xiso->callback([&] { cmd_experiment_iso(xopt.file, xopt.mod, xopt.transposed); });

    auto* xform = ex->add_subcommand("invariant-form", "term-count census of invariant values");
    xform->add_option("file", xopt.file)->required();
    xform->add_option("cocycle", xopt.coc)->required();
    xform->add_option("catalog", xopt.catalog)->required();
    xform->add_flag("--transposed", xopt.transposed);
    xform->callback(
        [&] { cmd_experiment_form(xopt.file, xopt.coc, xopt.catalog, xopt.transposed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? 0 : 2;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return static_cast<int>(err.kind());
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
