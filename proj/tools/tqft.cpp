// tqft: batch front end. Exit status 0 on success, 1 on domain errors,
// 2 on I/O and parse errors. JSON goes to stdout, diagnostics to stderr.
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tqft/category/invariants.hpp"
#include "tqft/category/io.hpp"
#include "tqft/category/torus.hpp"
#include "tqft/category/validate.hpp"
#include "tqft/center/center.hpp"
#include "tqft/diagram/io.hpp"
#include "tqft/errors.hpp"
#include "tqft/fourmanifolds/kirby.hpp"
#include "tqft/fourmanifolds/wall.hpp"
#include "tqft/links/rt.hpp"
#include "tqft/scalars/embed.hpp"
#include "tqft/statesum/statesum.hpp"

using namespace tqft;

namespace {

struct Common {
    std::string format = "text";
    int digits = 12;
    int threads = 1;
};

Common opts;

json scalar_doc(const CycloScalar& s) {
    ComplexApprox a = embed_complex(s, opts.digits);
    return {{"exact", scalar_to_json(s)}, {"approx", format_complex(s, opts.digits)}, {"re", a.re}, {"im", a.im}};
}

json matrix_doc(const ScalarMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& x : r) row.push_back(scalar_doc(x));
        rows.push_back(row);
    }
    return rows;
}

std::string text_matrix(const ScalarMatrix& m) {
    std::ostringstream os;
    for (const auto& r : m) {
        os << "  [";
        for (size_t j = 0; j < r.size(); ++j) os << (j ? ", " : "") << format_complex(r[j], opts.digits);
        os << "]\n";
    }
    return os.str();
}

// Either one JSON document or "key: value" lines, in insertion order.
struct Report {
    json doc = json::object();
    std::vector<std::pair<std::string, std::string>> lines;

    void scalar(const std::string& key, const CycloScalar& s) {
        doc[key] = scalar_doc(s);
        lines.emplace_back(key, format_complex(s, opts.digits) + "   [" + s.to_string() + "]");
    }
    void value(const std::string& key, const json& v, const std::string& text) {
        doc[key] = v;
        lines.emplace_back(key, text);
    }
    void print() const {
        if (opts.format == "json") {
            std::cout << doc.dump(2) << "\n";
            return;
        }
        for (const auto& [k, v] : lines) {
            if (v.find('\n') != std::string::npos)
                std::cout << k << ":\n" << v;
            else
                std::cout << k << ": " << v << "\n";
        }
    }
};

std::string join_labels(const std::vector<int>& xs, const PremodularData& c) {
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : ", ") + c.labels[x];
    return "{" + s + "}";
}

int parse_label(const std::string& s, const PremodularData& c) {
    int i = c.label_index(s);
    if (i >= 0) return i;
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size() && v >= 0 && v < c.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error("coloring-error", "unknown label '" + s + "' in " + c.name);
}

std::vector<int> parse_labels(const std::string& s, size_t count, const PremodularData& c) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_label(part, c));
    if (out.size() != count)
        throw ParseError("expected " + std::to_string(count) + " comma-separated labels, got '" + s + "'");
    return out;
}

std::string object_text(const CenterObject& o, const PremodularData& c) {
    std::string s;
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < c.size(); ++j) {
            long m = o.mult[i][j];
            if (!m) continue;
            s += (s.empty() ? "" : " + ") + (m > 1 ? std::to_string(m) + "*" : "") + c.labels[i] + " x " + c.labels[j] + "*";
        }
    return s.empty() ? "0" : s;
}

// ---- subcommands -------------------------------------------------------

void cat_list() {
    Report r;
    json names = builtin_names();
    std::string text;
    for (const auto& n : builtin_names()) text += n + " ";
    r.value("builtins", names, text);
    r.print();
}

int cat_validate(const std::string& selector) {
    PremodularData raw;
    bool known = false;
    for (const auto& n : builtin_names())
        if (n == selector) {
            raw = *builtin(n);
            known = true;
        }
    if (!known) raw = category_from_json(read_json_file(selector));
    ValidationReport rep = validate(raw);
    Report r;
    r.value("category", raw.name, raw.name);
    r.value("passed", rep.passed, rep.passed ? "yes" : "no");
    json fails = json::array();
    std::string text;
    for (const auto& f : rep.failures) {
        std::string w;
        for (const auto& x : f.witness) w += (w.empty() ? "" : ",") + x;
        fails.push_back({{"axiom", f.axiom}, {"witness", f.witness}, {"lhs", scalar_doc(f.lhs)}, {"rhs", scalar_doc(f.rhs)}});
        text += "  " + f.axiom + " at (" + w + "): " + format_complex(f.lhs, opts.digits) + " vs " +
                format_complex(f.rhs, opts.digits) + "\n";
        std::cerr << "axiom " << f.axiom << " fails at (" << w << ")\n";
    }
    if (!rep.failures.empty()) r.value("failures", fails, text);
    r.print();
    return rep.passed ? 0 : 1;
}

void cat_info(const std::string& selector) {
    CategoryPtr c = resolve_category(selector);
    DerivedConstants k = derived_constants(*c);
    Report r;
    r.value("name", c->name, c->name);
    r.value("labels", c->labels, join_labels([&] {
                std::vector<int> all(c->size());
                for (int i = 0; i < c->size(); ++i) all[i] = i;
                return all;
            }(), *c));
    r.scalar("D", k.D);
    r.scalar("p_plus", k.p_plus);
    r.scalar("p_minus", k.p_minus);
    if (c->kappa) r.scalar("kappa", *c->kappa);
    ScalarMatrix s = s_matrix(*c);
    r.value("S", matrix_doc(s), text_matrix(s));
    bool modular = is_modular(*c);
    r.value("modular", modular, modular ? "yes" : "no");
    std::vector<int> mc = muger_center(*c);
    json names = json::array();
    for (int x : mc) names.push_back(c->labels[x]);
    r.value("muger_center", names, join_labels(mc, *c));
    r.print();
}

void diagram_eval(const std::string& path, const std::string& selector, const std::vector<std::string>& colors) {
    CategoryPtr c = resolve_category(selector);
    SlicedDiagram d = diagram_from_json(read_json_file(path), c.get());
    std::vector<int> slots(d.slot_names.size(), kOmega);
    for (const auto& spec : colors) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw ParseError("--color expects slot=label, got '" + spec + "'");
        std::string name = spec.substr(0, eq);
        auto it = std::find(d.slot_names.begin(), d.slot_names.end(), name);
        if (it == d.slot_names.end()) throw Error("coloring-error", "diagram has no component '" + name + "'");
        std::string lab = spec.substr(eq + 1);
        slots[it - d.slot_names.begin()] = lab == "omega" ? kOmega : parse_label(lab, *c);
    }
    MorphismMatrix m = evaluate(d, c, slots);
    Report r;
    if (m.is_scalar()) {
        r.scalar("value", m.scalar());
    } else {
        auto trees = [](const std::vector<Tree>& ts) {
            json a = json::array();
            for (const auto& t : ts) a.push_back(t);
            return a;
        };
        r.value("source_trees", trees(m.source), std::to_string(m.source.size()) + " basis trees");
        r.value("target_trees", trees(m.target), std::to_string(m.target.size()) + " basis trees");
        r.value("matrix", matrix_doc(m.entries), text_matrix(m.entries));
    }
    r.print();
}

void rt(const std::string& path, const std::string& selector) {
    CategoryPtr c = resolve_category(selector);
    FramedLink L = link_from_json(read_json_file(path));
    Report r;
    r.value("components", L.size(), std::to_string(L.size()));
    r.value("signature", link_signature(L), std::to_string(link_signature(L)));
    r.scalar("zrt", zrt3(L, c, opts.threads));
    r.print();
}

int cy(const std::string& path, const std::string& selector, bool check) {
    CategoryPtr c = resolve_category(selector);
    KirbyPresentation k = kirby_from_json(read_json_file(path));
    Report r;
    CycloScalar closed = zcy_closed(k, c, opts.threads);
    r.scalar("zcy", closed);
    bool equal = true;
    if (check) {
        CycloScalar formula = zcy_formula(k, c);
        r.value("euler_char", euler_char(k), std::to_string(euler_char(k)));
        r.value("signature", sigma4(k), std::to_string(sigma4(k)));
        r.scalar("formula", formula);
        equal = closed == formula;
        r.value("equal", equal, equal ? "yes" : "no");
    }
    r.print();
    return equal ? 0 : 1;
}

void wall(const std::string& path) {
    LagrangianTriple t = lagrangian_triple_from_json(read_json_file(path));
    int w = wall_index(t);
    Report r;
    r.value("wall_index", w, std::to_string(w));
    r.print();
}

void statesum(const std::string& path, const std::string& selector, long long budget, const std::string& conv) {
    CategoryPtr c = resolve_category(selector);
    OrderedTriangulation t = triangulation_from_json(read_json_file(path));
    StatesumOptions o;
    o.budget = budget >= 0 ? static_cast<std::uint64_t>(budget) : budget_from_env();
    o.threads = opts.threads;
    o.normalization = conv == "cky" ? Normalization::Cky : Normalization::Dual;
    Report r;
    r.value("vertices", t.vertex_count(), std::to_string(t.vertex_count()));
    r.value("pentachora", t.pentachora().size(), std::to_string(t.pentachora().size()));
    r.scalar("zcy", cy_statesum(t, c, o));
    r.print();
}

void center_fuse(const std::string& a, const std::string& b, const std::string& selector) {
    CategoryPtr c = resolve_category(selector);
    require_modular(*c);
    auto x = parse_labels(a, 2, *c), y = parse_labels(b, 2, *c);
    CenterObject out = reduced_tensor(simple_object(c->size(), x[0], x[1]), simple_object(c->size(), y[0], y[1]), *c);
    Report r;
    r.value("product", out.mult, object_text(out, *c));
    r.print();
}

void center_qrank(const std::string& q, const std::string& selector) {
    CategoryPtr c = resolve_category(selector);
    auto l = parse_labels(q, 4, *c);
    MorphismMatrix m = q_projector(l[0], l[1], l[2], l[3], c);
    long rank = static_cast<long>(mat_rank(m.entries));
    bool idem = mat_equal(mat_mul(m.entries, m.entries), m.entries);
    long expected = expected_q_rank(l[0], l[1], l[2], l[3], *c);
    Report r;
    r.value("rank", rank, std::to_string(rank));
    r.value("fusion_rule_rank", expected, std::to_string(expected));
    r.value("idempotent", idem, idem ? "yes" : "no");
    r.print();
}

void center_table(const std::string& selector) {
    CategoryPtr c = resolve_category(selector);
    require_modular(*c);
    const int n = c->size();
    json rows = json::array();
    std::string text;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    CenterObject out = reduced_tensor(simple_object(n, i, j), simple_object(n, k, l), *c);
                    if (out.is_zero()) continue;
                    rows.push_back({{"left", {c->labels[i], c->labels[j]}}, {"right", {c->labels[k], c->labels[l]}},
                                    {"product", out.mult}});
                    text += "  (" + c->labels[i] + " x " + c->labels[j] + "*) . (" + c->labels[k] + " x " + c->labels[l] +
                            "*) = " + object_text(out, *c) + "\n";
                }
    Report r;
    r.value("nonzero_products", rows, text);
    r.print();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of premodular categories: diagrams, RT, Crane-Yetter, centers"};
    app.require_subcommand(1);
    app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--digits", opts.digits, "Digits in complex approximations")->check(CLI::Range(1, 200));
    app.add_option("--threads", opts.threads, "Worker threads")->check(CLI::Range(1, 256));

    std::string selector, path, a, b;
    std::vector<std::string> colors;
    bool check = false;
    long long budget = -1;
    std::string conv = "dual";
    std::function<int()> action;
    auto run = [&](std::function<int()> f) { return [&action, f] { action = f; }; };
    auto category_opt = [&](CLI::App* s) { s->add_option("--category", selector, "Built-in name or category file")->required(); };

    auto* cat = app.add_subcommand("cat", "Category catalog")->require_subcommand(1);
    cat->add_subcommand("list", "List built-in categories")->callback(run([] { cat_list(); return 0; }));
    auto* val = cat->add_subcommand("validate", "Check coherence axioms");
    val->add_option("category", selector)->required();
    val->callback(run([&] { return cat_validate(selector); }));
    auto* info = cat->add_subcommand("info", "D, Gauss sums, kappa, S-matrix, Muger center");
    info->add_option("category", selector)->required();
    info->callback(run([&] { cat_info(selector); return 0; }));

    auto* dia = app.add_subcommand("diagram", "Sliced diagrams")->require_subcommand(1);
    auto* ev = dia->add_subcommand("eval", "Evaluate a diagram file");
    ev->add_option("file", path)->required();
    category_opt(ev);
    ev->add_option("--color", colors, "Component color, slot=label (default omega)");
    ev->callback(run([&] { diagram_eval(path, selector, colors); return 0; }));

    auto* rts = app.add_subcommand("rt", "Reshetikhin-Turaev invariant of a surgery link");
    rts->add_option("file", path)->required();
    category_opt(rts);
    rts->callback(run([&] { rt(path, selector); return 0; }));

    auto* cys = app.add_subcommand("cy", "Crane-Yetter invariant of a Kirby presentation");
    cys->add_option("file", path)->required();
    category_opt(cys);
    cys->add_flag("--check-formula", check, "Compare with kappa^sigma D^{chi/2}");
    cys->callback(run([&] { return cy(path, selector, check); }));

    auto* ws = app.add_subcommand("wall", "Wall index of a Lagrangian triple");
    ws->add_option("file", path)->required();
    ws->callback(run([&] { wall(path); return 0; }));

    auto* ss = app.add_subcommand("statesum", "Crane-Yetter state sum on an ordered triangulation");
    ss->add_option("file", path)->required();
    category_opt(ss);
    ss->add_option("--budget", budget, "Weighted operations allowed (default TQFT_BUDGET or 1e8)")->check(CLI::NonNegativeNumber);
    ss->add_option("--convention", conv, "Pentachoron normalization")->check(CLI::IsMember({"dual", "cky"}));
    ss->callback(run([&] { statesum(path, selector, budget, conv); return 0; }));

    auto* cen = app.add_subcommand("center", "Reduced tensor product on the Drinfeld center")->require_subcommand(1);
    auto* fu = cen->add_subcommand("fuse", "(X_i x X_j*) . (X_k x X_l*)");
    fu->add_option("left", a, "i,j")->required();
    fu->add_option("right", b, "k,l")->required();
    category_opt(fu);
    fu->callback(run([&] { center_fuse(a, b, selector); return 0; }));
    auto* qr = cen->add_subcommand("qrank", "Rank of the projector Q on (i, j*, k, l*)");
    qr->add_option("labels", a, "i,j,k,l")->required();
    category_opt(qr);
    qr->callback(run([&] { center_qrank(a, selector); return 0; }));
    auto* tb = cen->add_subcommand("table", "Full reduced multiplication table");
    category_opt(tb);
    tb->callback(run([&] { center_table(selector); return 0; }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return action ? action() : 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
