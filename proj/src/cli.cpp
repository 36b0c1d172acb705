#include "grassq/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grassq/gw.hpp"
#include "grassq/pieri_index.hpp"
#include "grassq/presentation.hpp"

namespace grassq::cli {

namespace {

using nlohmann::json;

struct SpecArgs {
    std::string type = "C";
    int m = 0;
    int n = 0;
};

void add_spec_options(CLI::App* cmd, SpecArgs& sa) {
    cmd->add_option("--type", sa.type, "Lie type: C, B, D or Dmax")->required();
    cmd->add_option("--m", sa.m, "isotropic subspace dimension")->required();
    cmd->add_option("--n", sa.n, "half-rank parameter n")->required();
}

GrassmannianSpec build_spec(const SpecArgs& sa) {
    auto t = lie_type_from_string(sa.type);
    if (!t) throw std::invalid_argument("unknown --type \"" + sa.type + "\" (want C, B, D, Dmax)");
    int cap = 8;
    if (const char* env = std::getenv("GRASSQ_MAX_N")) {
        cap = std::atoi(env);
        if (cap <= 0) throw std::invalid_argument("GRASSQ_MAX_N must be a positive integer");
    }
    if (sa.n > cap)
        throw std::invalid_argument("n = " + std::to_string(sa.n) +
                                    " exceeds GRASSQ_MAX_N = " + std::to_string(cap));
    return make_spec(*t, sa.m, sa.n);
}

SchubertLabel parse_basis_label(const GrassmannianSpec& spec, const std::string& text) {
    SchubertLabel label = parse_label(text);
    if (!validate_label(spec, label)) {
        if (spec.is_even_orthogonal() && label.type == 0 &&
            std::find(label.parts.begin(), label.parts.end(), spec.k) != label.parts.end())
            throw std::invalid_argument("partition \"" + text +
                                        "\" has a part equal to k = " + std::to_string(spec.k) +
                                        "; append :1 or :2 to choose the type");
        throw std::invalid_argument("partition \"" + text + "\" is not a basis label of this space");
    }
    return label;
}

json spec_to_json(const GrassmannianSpec& spec) {
    return json{{"type", to_string(spec.lie_type)}, {"m", spec.m},   {"n", spec.n},
                {"k", spec.k},                      {"N", spec.ambient_N},
                {"dim", spec.space_dim},            {"q_degrees", spec.q_degrees}};
}

json element_to_json(const GrassmannianSpec& spec, const RingElement& x) {
    json terms = json::array();
    for (const auto& [key, c] : x.terms()) {
        terms.push_back(json{{"partition", key.label.parts},
                             {"type", key.label.type},
                             {"q", key.q.e},
                             {"coeff", c.to_string()}});
    }
    return json{{"spec", spec_to_json(spec)}, {"terms", terms}};
}

void emit_element(const GrassmannianSpec& spec, const RingElement& x, bool as_json,
                  std::ostream& out) {
    if (as_json) {
        out << element_to_json(spec, x).dump() << "\n";
    } else {
        out << to_string(x) << "\n";
    }
}

QExponent parse_degree(const GrassmannianSpec& spec, int d, int d1, int d2, bool has_d,
                       bool has_d1, bool has_d2) {
    QExponent q = QExponent::zero(spec.num_q_vars());
    if (spec.num_q_vars() == 1) {
        if (has_d1 || has_d2) throw std::invalid_argument("--d1/--d2 are for Dmax; use --d");
        if (!has_d) throw std::invalid_argument("missing --d");
        q.e[0] = d;
    } else {
        if (has_d) throw std::invalid_argument("Dmax has two degrees; use --d1 and --d2");
        if (!has_d1 || !has_d2) throw std::invalid_argument("missing --d1/--d2");
        q.e = {d1, d2};
    }
    for (int v : q.e) {
        if (v < 0) throw std::invalid_argument("degrees must be nonnegative");
    }
    return q;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schubert calculus on isotropic Grassmannians: classical and quantum "
                 "Pieri products, Gromov-Witten invariants, conversions and ring checks"};
    app.require_subcommand(1);

    SpecArgs sa;
    bool as_json = false;
    bool use_oracle = false;
    int p = 0;
    bool primed = false;
    int d = 0, d1 = 0, d2 = 0;
    std::vector<std::string> operands;
    std::string index_text;

    auto add_common = [&](CLI::App* cmd) {
        add_spec_options(cmd, sa);
        cmd->add_flag("--json", as_json, "render JSON instead of text");
        return cmd;
    };

    CLI::App* c_pieri = add_common(app.add_subcommand("pieri", "classical Pieri product"));
    c_pieri->add_option("--p", p, "special class degree")->required();
    c_pieri->add_flag("--primed", primed, "use tau'_k (requires p = k, types D/Dmax)");
    c_pieri->add_flag("--oracle", use_oracle, "compute via the index-set rule");
    c_pieri->add_option("partition", operands, "k-strict partition")->expected(1);

    CLI::App* c_qpieri = add_common(app.add_subcommand("qpieri", "quantum Pieri product"));
    c_qpieri->add_option("--p", p, "special class degree")->required();
    c_qpieri->add_flag("--primed", primed, "use tau'_k");
    c_qpieri->add_option("partition", operands, "k-strict partition")->expected(1);

    CLI::App* c_product = add_common(app.add_subcommand("product", "classical product"));
    c_product->add_flag("--oracle", use_oracle, "route Pieri steps through the index-set rule");
    c_product->add_option("partitions", operands, "two k-strict partitions")->expected(2);

    CLI::App* c_qproduct = add_common(app.add_subcommand("qproduct", "quantum product"));
    c_qproduct->add_option("partitions", operands, "two k-strict partitions")->expected(2);

    CLI::App* c_gw = add_common(app.add_subcommand("gw", "Gromov-Witten invariant"));
    CLI::Option* od = c_gw->add_option("--d", d, "curve degree");
    CLI::Option* od1 = c_gw->add_option("--d1", d1, "q1 degree (Dmax)");
    CLI::Option* od2 = c_gw->add_option("--d2", d2, "q2 degree (Dmax)");
    c_gw->add_option("partitions", operands, "three k-strict partitions")->expected(3);

    CLI::App* c_dual = add_common(app.add_subcommand("dual", "Poincare dual label"));
    c_dual->add_option("partition", operands, "k-strict partition")->expected(1);

    CLI::App* c_convert = add_common(app.add_subcommand("convert", "partition <-> index set"));
    c_convert->add_option("partition", operands, "k-strict partition")->expected(0, 1);
    c_convert->add_option("--index", index_text, "index set to convert back to a partition");

    add_common(app.add_subcommand("basis", "list all basis labels in the fixed order"));

    add_common(app.add_subcommand("verify",
                                  "presentation, basis and oracle-equivalence checks"));

    std::vector<const char*> argv;
    argv.push_back("grassq");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        GrassmannianSpec spec = build_spec(sa);
        if (c_pieri->parsed()) {
            SchubertLabel lambda = parse_basis_label(spec, operands[0]);
            SpecialClass s{p, primed};
            RingElement x = use_oracle ? classical_pieri_via_index(spec, s, lambda)
                                       : classical_pieri(spec, s, lambda);
            emit_element(spec, x, as_json, out);
        } else if (c_qpieri->parsed()) {
            SchubertLabel lambda = parse_basis_label(spec, operands[0]);
            emit_element(spec, quantum_pieri(spec, SpecialClass{p, primed}, lambda), as_json, out);
        } else if (c_product->parsed() || c_qproduct->parsed()) {
            Engine engine(spec, use_oracle);
            SchubertLabel a = parse_basis_label(spec, operands[0]);
            SchubertLabel b = parse_basis_label(spec, operands[1]);
            RingElement x = c_product->parsed() ? engine.classical_product(a, b)
                                                : engine.quantum_product(a, b);
            emit_element(spec, x, as_json, out);
        } else if (c_gw->parsed()) {
            Engine engine(spec);
            SchubertLabel a = parse_basis_label(spec, operands[0]);
            SchubertLabel b = parse_basis_label(spec, operands[1]);
            SchubertLabel c = parse_basis_label(spec, operands[2]);
            QExponent deg = parse_degree(spec, d, d1, d2, od->count() > 0, od1->count() > 0,
                                         od2->count() > 0);
            BigInt v = engine.gromov_witten(a, b, c, deg);
            if (as_json) {
                out << json{{"spec", spec_to_json(spec)}, {"value", v.to_string()}}.dump() << "\n";
            } else {
                out << v.to_string() << "\n";
            }
        } else if (c_dual->parsed()) {
            SchubertLabel lambda = parse_basis_label(spec, operands[0]);
            SchubertLabel d_label = dual(spec, lambda);
            if (as_json) {
                out << json{{"spec", spec_to_json(spec)},
                            {"partition", d_label.parts},
                            {"type", d_label.type}}
                           .dump()
                    << "\n";
            } else {
                out << to_string(d_label) << "\n";
            }
        } else if (c_convert->parsed()) {
            if (!index_text.empty()) {
                IndexSet P;
                std::size_t pos = 0;
                while (pos <= index_text.size()) {
                    std::size_t next = index_text.find(',', pos);
                    std::string tok = index_text.substr(
                        pos, next == std::string::npos ? std::string::npos : next - pos);
                    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                        throw std::invalid_argument("--index wants comma-separated positive integers");
                    P.entries.push_back(std::atoi(tok.c_str()));
                    if (next == std::string::npos) break;
                    pos = next + 1;
                }
                std::sort(P.entries.begin(), P.entries.end());
                SchubertLabel label = index_set_to_label(spec, P);
                if (as_json) {
                    out << json{{"spec", spec_to_json(spec)},
                                {"partition", label.parts},
                                {"type", label.type}}
                               .dump()
                        << "\n";
                } else {
                    out << to_string(label) << "\n";
                }
            } else {
                if (operands.empty())
                    throw std::invalid_argument("convert needs a partition or --index");
                SchubertLabel lambda = parse_basis_label(spec, operands[0]);
                IndexSet P = label_to_index_set(spec, lambda);
                if (as_json) {
                    out << json{{"spec", spec_to_json(spec)}, {"index_set", P.entries}}.dump()
                        << "\n";
                } else {
                    out << to_string(P) << "\n";
                }
            }
        } else if (app.get_subcommand("basis")->parsed()) {
            auto basis = enumerate_basis(spec);
            if (as_json) {
                json labels = json::array();
                for (const auto& l : basis)
                    labels.push_back(json{{"partition", l.parts}, {"type", l.type}});
                out << json{{"spec", spec_to_json(spec)}, {"labels", labels}}.dump() << "\n";
            } else {
                for (const auto& l : basis) out << to_string(l) << "\n";
            }
        } else if (app.get_subcommand("verify")->parsed()) {
            Engine engine(spec);
            json checks = json::array();
            bool all = true;
            auto record = [&](const std::string& name, bool pass) {
                checks.push_back(json{{"name", name}, {"pass", pass}});
                if (!as_json)
                    out << (pass ? "pass  " : "FAIL  ") << name << "\n";
                all = all && pass;
            };
            BasisReport basis_rep = basis_check(engine);
            record("basis: monomial matrix unitriangular", basis_rep.unitriangular);
            record("basis: rank matches relation degrees (" +
                       std::to_string(basis_rep.basis_size) + " classes)",
                   basis_rep.rank_matches);
            PresentationReport classical = verify_presentation(engine, ProductMode::Classical);
            for (const auto& rel : classical.relations)
                record("classical " + rel.name, rel.pass);
            if (spec.quantum_supported()) {
                PresentationReport quantum = verify_presentation(engine, ProductMode::Quantum);
                for (const auto& rel : quantum.relations)
                    record("quantum " + rel.name, rel.pass);
            } else {
                record("quantum: skipped (unsupported for this spec)", true);
            }
            bool oracle_ok = true;
            for (const SchubertLabel& lambda : enumerate_basis(spec)) {
                for (int pp = 1; pp <= spec.max_part() && oracle_ok; ++pp) {
                    SpecialClass s{pp, false};
                    if (classical_pieri(spec, s, lambda) !=
                        classical_pieri_via_index(spec, s, lambda))
                        oracle_ok = false;
                }
                if (spec.is_even_orthogonal()) {
                    SpecialClass s{spec.k, true};
                    if (classical_pieri(spec, s, lambda) !=
                        classical_pieri_via_index(spec, s, lambda))
                        oracle_ok = false;
                }
                if (!oracle_ok) break;
            }
            record("oracle: index-set Pieri agrees on every special class and basis label",
                   oracle_ok);
            if (as_json) {
                out << json{{"spec", spec_to_json(spec)}, {"checks", checks}, {"pass", all}}.dump()
                    << "\n";
            } else {
                out << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
            }
            return all ? 0 : 1;
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace grassq::cli
