#include "dioph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dioph/descent_tree.hpp"
#include "dioph/factor_tree.hpp"
#include "dioph/quad_core.hpp"
#include "dioph/rational_tuples.hpp"

namespace dioph {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Json, Plain };

struct Context {
    std::ostream& out;
    std::ostream& err;
    Format format = Format::Json;
    EnumerateOptions opts;

    void emit(const json& record) const { out << record.dump() << '\n'; }
};

// ---- argument parsing -------------------------------------------------------

Rat arg_rat(const std::string& text, const std::string& name) {
    try {
        return parse_rat(text);
    } catch (const std::exception& e) {
        throw ParseError("argument " + name + ": " + e.what());
    }
}

Int arg_int(const std::string& text, const std::string& name) {
    try {
        return parse_int(text);
    } catch (const std::exception& e) {
        throw ParseError("argument " + name + ": " + e.what());
    }
}

std::vector<Int> arg_ints(const std::vector<std::string>& texts) {
    std::vector<Int> out;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        out.push_back(arg_int(texts[i], std::to_string(i + 1) + " ('" + texts[i] + "')"));
    }
    return out;
}

// ---- serialization ----------------------------------------------------------

template <typename Range>
json numbers(const Range& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(to_string(v));
    return arr;
}

template <typename Range>
std::string plain_numbers(const Range& values) {
    std::string s;
    for (const auto& v : values) {
        if (!s.empty()) s += ' ';
        s += to_string(v);
    }
    return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json factors_json(const ElementFactors& e) {
    return json{{"value", to_string(e.value)}, {"pO", to_string(e.pO)}, {"mO", to_string(e.mO)},
                {"Op", to_string(e.Op)},       {"Om", to_string(e.Om)}, {"pp", to_string(e.pp)},
                {"mp", to_string(e.mp)},       {"pm", to_string(e.pm)}, {"mm", to_string(e.mm)}};
}

json array_rows(const FactorArray3& f) {
    const auto x = column(f, 0);
    const auto y = column(f, 1);
    const auto z = column(f, 2);
    json rows = json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        rows.push_back(numbers(std::array<Int, 3>{x[i], y[i], z[i]}));
    }
    return rows;
}

json matrix_json(const FactorMatrix2& m) {
    return json{{"tuple", numbers(std::array<Int, 2>{m.a, m.b})},
                {"r", to_string(m.r)},
                {"a_plus", to_string(m.a_plus)},
                {"a_minus", to_string(m.a_minus)},
                {"b_plus", to_string(m.b_plus)},
                {"b_minus", to_string(m.b_minus)},
                {"determinant", to_string(m.determinant())}};
}

std::string plain_matrix(const FactorMatrix2& m) {
    std::ostringstream s;
    s << "(" << m.a << ", " << m.b << ") r=" << m.r << "  | " << m.a_plus << " " << m.b_minus << " |  | "
      << m.a_minus << " " << m.b_plus << " |  det=" << m.determinant();
    return s.str();
}

// ---- subcommands ------------------------------------------------------------

int cmd_verify(const Context& ctx, const std::vector<std::string>& texts) {
    std::vector<Rat> elems;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        elems.push_back(arg_rat(texts[i], std::to_string(i + 1) + " ('" + texts[i] + "')"));
    }
    if (elems.size() < Tuple::kMinSize || elems.size() > Tuple::kMaxSize) {
        throw ParseError("verify: expected 2 to 6 numbers, got " + std::to_string(elems.size()));
    }
    const Tuple t(elems);
    const auto check = is_diophantine(t);

    json rec{{"tuple", numbers(elems)}, {"diophantine", check.ok}};
    bool ok = check.ok;
    if (check.ok) {
        rec["witnesses"] = numbers(check.roots);
    } else {
        if (check.failing_pair) {
            rec["failing_pair"] = {check.failing_pair->first, check.failing_pair->second};
        }
        rec["reason"] = check.reason;
    }
    if (t.size() == 3 || t.size() == 4) {
        rec["regular"] = is_regular(t);
    }
    std::vector<IdentityResidual> residuals;
    if (t.size() == 4) {
        residuals = identity_suite(t[0], t[1], t[2], t[3]);
        json ids = json::object();
        bool all_zero = true;
        for (const auto& r : residuals) {
            ids[r.name] = to_string(r.residual);
            all_zero = all_zero && r.residual.is_zero();
        }
        rec["identities"] = ids;
        rec["identities_ok"] = all_zero;
        ok = ok && all_zero;
    }

    if (ctx.format == Format::Json) {
        ctx.emit(rec);
    } else {
        ctx.out << "tuple       " << to_string(t) << '\n';
        ctx.out << "diophantine " << yes_no(check.ok);
        if (check.ok) {
            ctx.out << "  roots " << plain_numbers(check.roots);
        } else {
            ctx.out << "  (" << check.reason << ")";
        }
        ctx.out << '\n';
        if (rec.contains("regular")) {
            ctx.out << "regular     " << yes_no(rec["regular"].get<bool>()) << '\n';
        }
        for (const auto& r : residuals) {
            ctx.out << "identity    " << r.name << "  residual " << to_string(r.residual) << '\n';
        }
    }
    return ok ? kExitOk : kExitFailed;
}

int cmd_extend(const Context& ctx, const std::vector<std::string>& texts) {
    const auto v = arg_ints(texts);
    const Int& a = v[0];
    const Int& b = v[1];
    const Int& c = v[2];
    const auto ext = ahs_extend(a, b, c);
    const auto& w = ext.witness;

    // Roots of ad+1, bd+1, cd+1; the lower root flips the sign of r.
    const std::array<Int, 3> upper_roots{a * w.t + w.r * w.s, b * w.s + w.r * w.t, c * w.r + w.s * w.t};
    const std::array<Int, 3> lower_roots{boost::multiprecision::abs(a * w.t - w.r * w.s),
                                         boost::multiprecision::abs(b * w.s - w.r * w.t),
                                         boost::multiprecision::abs(w.s * w.t - c * w.r)};
    for (const auto& [d, roots] : {std::pair{ext.upper, upper_roots}, std::pair{ext.lower, lower_roots}}) {
        const std::array<Int, 3> elems{a, b, c};
        for (std::size_t i = 0; i < 3; ++i) {
            if (elems[i] * d + 1 != roots[i] * roots[i]) {
                throw InvariantError("extend: extension witness does not square correctly");
            }
        }
    }

    if (ctx.format == Format::Json) {
        ctx.emit({{"tuple", numbers(Quad{a, b, c, ext.upper})},
                  {"root", "upper"},
                  {"regular", eval_P(Quad{a, b, c, ext.upper}) == 0},
                  {"witnesses", numbers(std::array<Int, 4>{w.r, w.s, w.t, w.u})},
                  {"extension_witnesses", numbers(upper_roots)}});
        ctx.emit({{"tuple", numbers(Quad{a, b, c, ext.lower})},
                  {"root", "lower"},
                  {"regular", eval_P(Quad{a, b, c, ext.lower}) == 0},
                  {"witnesses", numbers(std::array<Int, 3>{w.r, w.s, w.t})},
                  {"extension_witnesses", numbers(lower_roots)}});
    } else {
        ctx.out << "r s t u   " << plain_numbers(std::array<Int, 4>{w.r, w.s, w.t, w.u}) << '\n';
        ctx.out << "d upper   " << ext.upper << "  (ad+1, bd+1, cd+1 roots " << plain_numbers(upper_roots)
                << ")\n";
        ctx.out << "d lower   " << ext.lower << "  (ad+1, bd+1, cd+1 roots " << plain_numbers(lower_roots)
                << ")\n";
    }
    return kExitOk;
}

int cmd_descend(const Context& ctx, const std::vector<std::string>& texts) {
    const auto v = arg_ints(texts);
    const Quad q{v[0], v[1], v[2], v[3]};
    const auto cert = descend(q);
    if (!verify_certificate(cert)) {
        throw InvariantError("descend: certificate failed re-verification");
    }
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& s = cert.steps[i];
        if (ctx.format == Format::Json) {
            ctx.emit({{"step", i + 1},
                      {"tuple", numbers(s.tuple)},
                      {"swap_index", s.index},
                      {"new_value", to_string(s.new_value)}});
        } else {
            ctx.out << "step " << (i + 1) << "  " << to_string(s.tuple) << "  slot " << s.index << " -> "
                    << s.new_value << '\n';
        }
    }
    if (ctx.format == Format::Json) {
        ctx.emit({{"tuple", numbers(cert.terminal)},
                  {"terminal", true},
                  {"parity", to_string(cert.parity)},
                  {"steps", cert.steps.size()}});
    } else {
        ctx.out << "terminal " << to_string(cert.terminal) << "  " << to_string(cert.parity) << " tree, "
                << cert.steps.size() << " swap(s)\n";
    }
    return kExitOk;
}

Parity arg_parity(const std::string& text) {
    if (text == "odd") return Parity::Odd;
    if (text == "even") return Parity::Even;
    throw ParseError("--parity must be 'odd' or 'even', got '" + text + "'");
}

bool has_zero(const Quad& q) {
    return std::any_of(q.begin(), q.end(), [](const Int& v) { return v == 0; });
}

int cmd_enumerate(const Context& ctx, const std::string& bound_text, const std::string& parity_text,
                  bool include_zeros) {
    const Int bound = arg_int(bound_text, "--bound");
    const Parity parity = arg_parity(parity_text);
    std::size_t shown = 0;
    for (const auto& node : enumerate_tree(bound, parity, ctx.opts)) {
        if (!include_zeros && has_zero(node.tuple)) continue;
        ++shown;
        if (ctx.format == Format::Json) {
            ctx.emit({{"tuple", numbers(node.tuple)},
                      {"parity", to_string(parity)},
                      {"depth", node.depth},
                      {"regular", true}});
        } else {
            ctx.out << plain_numbers(node.tuple) << "  depth " << node.depth << '\n';
        }
    }
    ctx.err << shown << " node(s)\n";
    return kExitOk;
}

int cmd_search_pairs(const Context& ctx, const std::string& bound_text) {
    const Int bound = arg_int(bound_text, "--bound");
    const auto pairs = find_shared_max(bound, ctx.opts);
    for (const auto& p : pairs) {
        if (ctx.format == Format::Json) {
            json members = json::array();
            for (const Quad* q : {&p.first, &p.second}) {
                members.push_back({{"tuple", numbers(*q)}, {"regular", true}, {"parity", to_string(parity_of(*q))}});
            }
            ctx.emit({{"d", to_string(p.first[3])}, {"pair", members}});
        } else {
            ctx.out << plain_numbers(p.first) << '\n' << plain_numbers(p.second) << "\n\n";
        }
    }
    ctx.err << pairs.size() << " pair(s)\n";
    return kExitOk;
}

int cmd_search_systems(const Context& ctx, const std::string& bound_text) {
    const Int bound = arg_int(bound_text, "--bound");
    const auto systems = find_three_system(bound, ctx.opts);
    for (const auto& s : systems) {
        if (ctx.format == Format::Json) {
            ctx.emit({{"shared", numbers(s.shared)},
                      {"primed", numbers(s.primed)},
                      {"quadruples", {numbers(s.q1), numbers(s.q2), numbers(s.q3)}}});
        } else {
            ctx.out << "irregular " << to_string(s.shared) << "  via " << to_string(s.q1) << " "
                    << to_string(s.q2) << " " << to_string(s.q3) << '\n';
        }
    }
    ctx.err << systems.size() << " system(s)\n";
    return kExitOk;
}

int factorize_double(const Context& ctx, const Int& a, const Int& b) {
    const auto m = factor_double(a, b);
    const auto [left, right] = sb_children(m);
    const Int c = regular_triple_child(m);
    if (ctx.format == Format::Json) {
        json rec = matrix_json(m);
        rec["regular_triple_child"] = to_string(c);
        rec["children"] = {matrix_json(left), matrix_json(right)};
        ctx.emit(rec);
    } else {
        ctx.out << "matrix    " << plain_matrix(m) << '\n';
        ctx.out << "child     " << plain_matrix(left) << '\n';
        ctx.out << "child     " << plain_matrix(right) << '\n';
        ctx.out << "regular triple child c = " << c << '\n';
    }
    return kExitOk;
}

int factorize_triple(const Context& ctx, const Int& a, const Int& b, const Int& c) {
    const auto f = factor_triple(a, b, c);
    const auto df = d_factors(f);
    const auto kids = child_arrays(f, df);
    std::optional<BminusAFactors> ba;
    if (b > a) ba = factor_b_minus_a(f);

    if (ctx.format == Format::Json) {
        json rec{{"tuple", numbers(std::array<Int, 3>{a, b, c})},
                 {"witnesses", numbers(std::array<Int, 3>{f.r, f.s, f.t})},
                 {"factors", {{"a", factors_json(f.a)}, {"b", factors_json(f.b)}, {"c", factors_json(f.c)}}},
                 {"array", array_rows(f)},
                 {"unit_relations", numbers(unit_relations(f))},
                 {"d_factors",
                  {{"d1", to_string(df.d1)}, {"d2", to_string(df.d2)}, {"d3", to_string(df.d3)},
                   {"d4", to_string(df.d4)}, {"d", to_string(df.d)}}},
                 {"d_relations", numbers(d_relations(f, df))}};
        json children = json::array();
        for (const auto& k : kids) {
            children.push_back({{"tuple", numbers(std::array<Int, 3>{k.a.value, k.b.value, k.c.value})},
                                {"array", array_rows(k)},
                                {"unit_relations", numbers(unit_relations(k))}});
        }
        rec["children"] = children;
        if (ba) rec["b_minus_a"] = {{"f1", to_string(ba->f1)}, {"f2", to_string(ba->f2)}};
        ctx.emit(rec);
    } else {
        auto print_array = [&](const FactorArray3& x) {
            for (const auto& row : array_rows(x)) {
                ctx.out << "    ";
                for (const auto& cell : row) ctx.out << cell.get<std::string>() << '\t';
                ctx.out << '\n';
            }
        };
        ctx.out << "triple (" << a << ", " << b << ", " << c << ")  r s t = " << f.r << ' ' << f.s << ' ' << f.t
                << '\n';
        print_array(f);
        ctx.out << "unit relations  " << plain_numbers(unit_relations(f)) << '\n';
        ctx.out << "d1..d4          " << df.d1 << ' ' << df.d2 << ' ' << df.d3 << ' ' << df.d4 << "  d = " << df.d
                << '\n';
        ctx.out << "d relations     " << plain_numbers(d_relations(f, df)) << '\n';
        for (const auto& k : kids) {
            ctx.out << "child (" << k.a.value << ", " << k.b.value << ", " << k.c.value << ")\n";
            print_array(k);
        }
        if (ba) ctx.out << "b - a = 2 * " << ba->f1 << " * |" << ba->f2 << "|\n";
    }
    return kExitOk;
}

int cmd_factorize(const Context& ctx, const std::vector<std::string>& texts) {
    if (texts.size() != 2 && texts.size() != 3) {
        throw ParseError("factorize: expected 2 or 3 integers");
    }
    const auto v = arg_ints(texts);
    return v.size() == 2 ? factorize_double(ctx, v[0], v[1]) : factorize_triple(ctx, v[0], v[1], v[2]);
}

json sextuple_record(const SextupleRecord& rec) {
    json ann = json::array();
    for (const auto& s : rec.annotations) ann.push_back(subset_letters(s));
    return json{{"label", rec.label}, {"tuple", numbers(rec.elems)}, {"annotations", ann}};
}

int cmd_sextuples(const Context& ctx, bool check, const std::string& export_path) {
    const auto records = load_sextuple_dataset();
    if (!export_path.empty()) {
        std::ofstream file(export_path);
        if (!file) {
            throw ParseError("cannot write '" + export_path + "'");
        }
        for (const auto& rec : records) file << sextuple_record(rec).dump() << '\n';
        ctx.err << "wrote " << records.size() << " record(s) to " << export_path << '\n';
    }

    bool all_ok = true;
    for (const auto& rec : records) {
        json out = sextuple_record(rec);
        if (check) {
            const RationalTuple t(rec.elems, rec.label);
            const auto dio = verify_rational_diophantine(t);
            out["diophantine"] = dio.ok;
            if (dio.failing_pair) out["failing_pair"] = {dio.failing_pair->first, dio.failing_pair->second};
            json found = json::array();
            for (const auto& s : regular_subtuples(t)) found.push_back(subset_letters(s));
            out["regular_found"] = found;
            json confirmed = json::array();
            bool ok = dio.ok;
            for (const auto& s : rec.annotations) {
                if (s.size() == 5) {
                    confirmed.push_back({{"subset", subset_letters(s)}, {"regular", nullptr}});
                    continue;
                }
                const bool reg = subset_is_regular(rec.elems, s);
                ok = ok && reg;
                confirmed.push_back({{"subset", subset_letters(s)}, {"regular", reg}});
            }
            out["annotation_check"] = confirmed;
            out["ok"] = ok;
            all_ok = all_ok && ok;
        }
        if (ctx.format == Format::Json) {
            ctx.emit(out);
        } else {
            ctx.out << std::setw(3) << rec.label << "  " << plain_numbers(rec.elems);
            for (const auto& s : rec.annotations) ctx.out << "  (" << subset_letters(s) << ")";
            if (check) {
                ctx.out << "\n     diophantine " << yes_no(out["diophantine"].get<bool>());
                for (const auto& c : out["annotation_check"]) {
                    ctx.out << "  (" << c["subset"].get<std::string>() << ")="
                            << (c["regular"].is_null() ? "unchecked" : yes_no(c["regular"].get<bool>()));
                }
                ctx.out << (out["ok"].get<bool>() ? "  OK" : "  FAIL");
            }
            ctx.out << '\n';
        }
    }
    return all_ok ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic toolkit for regular Diophantine quadruples"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    unsigned workers = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "plain"}));
    app.add_option("--workers", workers, "Worker threads for searches (default: DIOPH_WORKERS or all cores)");

    std::vector<std::string> verify_args;
    auto* verify = app.add_subcommand("verify", "Diophantine, regularity and identity report for a tuple");
    verify->add_option("numbers", verify_args, "2 to 6 integers or p/q rationals")->required();

    std::vector<std::string> extend_args;
    auto* extend = app.add_subcommand("extend", "Both AHS extensions of a Diophantine triple");
    extend->add_option("numbers", extend_args, "a b c")->required()->expected(3);

    std::vector<std::string> descend_args;
    auto* descend_cmd = app.add_subcommand("descend", "Descent certificate of a solution of P = 0");
    descend_cmd->add_option("numbers", descend_args, "a b c d")->required()->expected(4);

    std::string bound_text;
    std::string parity_text;
    bool include_zeros = false;
    auto* enumerate = app.add_subcommand("enumerate", "Nodes of one solution tree up to a bound");
    enumerate->add_option("--bound", bound_text, "Largest element allowed")->required();
    enumerate->add_option("--parity", parity_text, "odd or even")->required();
    enumerate->add_flag("--include-zeros", include_zeros, "Also list nodes that contain zeros");

    std::string pairs_bound;
    auto* pairs = app.add_subcommand("search-pairs", "Regular quadruples sharing their largest element");
    pairs->add_option("--bound", pairs_bound, "Largest element allowed")->required();

    std::string systems_bound;
    auto* systems = app.add_subcommand("search-systems", "Three-quadruple systems implying an irregular quadruple");
    systems->add_option("--bound", systems_bound, "Largest element allowed")->required();

    std::vector<std::string> factor_args;
    auto* factorize = app.add_subcommand("factorize", "Factor matrix of an even double or factor array of an even triple");
    factorize->add_option("numbers", factor_args, "a b [c]")->required()->expected(2, 3);

    bool check = false;
    std::string export_path;
    auto* sextuples = app.add_subcommand("sextuples", "Embedded rational sextuple table");
    sextuples->add_flag("--check", check, "Verify every record");
    sextuples->add_option("--export", export_path, "Also write the table to this file");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Context ctx{out, err, format == "plain" ? Format::Plain : Format::Json, EnumerateOptions{workers}};
    try {
        if (*verify) return cmd_verify(ctx, verify_args);
        if (*extend) return cmd_extend(ctx, extend_args);
        if (*descend_cmd) return cmd_descend(ctx, descend_args);
        if (*enumerate) return cmd_enumerate(ctx, bound_text, parity_text, include_zeros);
        if (*pairs) return cmd_search_pairs(ctx, pairs_bound);
        if (*systems) return cmd_search_systems(ctx, systems_bound);
        if (*factorize) return cmd_factorize(ctx, factor_args);
        if (*sextuples) return cmd_sextuples(ctx, check, export_path);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "failed: " << e.what() << '\n';
        return kExitFailed;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}

}  // namespace dioph
