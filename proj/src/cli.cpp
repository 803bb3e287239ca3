#include "liejordan/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liejordan/bounds.hpp"
#include "liejordan/center.hpp"
#include "liejordan/error.hpp"
#include "liejordan/finitegroup.hpp"
#include "liejordan/minfaithful.hpp"
#include "liejordan/rootdata.hpp"

namespace liejordan::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return Format::Text;
}

std::string strip_spaces(std::string s) {
    std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

DominantWeight parse_weight(const std::string& text, int rank) {
    DominantWeight w;
    for (const auto& tok : split(strip_spaces(text), ',')) {
        if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("weight coordinate '" + tok + "' is not a non-negative integer");
        w.coords.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    if (w.rank() != static_cast<std::size_t>(rank))
        throw InputError("weight '" + text + "' has " + std::to_string(w.rank()) + " coordinates, expected " +
                         std::to_string(rank));
    return w;
}

// Exact decimal; long values get a digit count and leading digits appended.
std::string readable(const std::string& digits) {
    if (digits.size() <= 40) return digits;
    std::ostringstream os;
    os << digits << " (" << digits.size() << " digits, " << digits[0] << '.' << digits.substr(1, 5) << 'e'
       << digits.size() - 1 << ')';
    return os.str();
}

json weight_json(const DominantWeight& w) {
    return json(w.coords);
}

std::string weight_csv(const DominantWeight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.coords.size(); ++i) s += (i ? " " : "") + std::to_string(w.coords[i]);
    return s;
}

std::string join_labels(const WeightSet& ws, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? sep : "") + ws.weights()[i].to_string();
    return s;
}

json rdim_json(const SimpleType& t, const RdimResult& r) {
    json j;
    j["type"] = t.name();
    j["family"] = std::string(1, family_letter(t.family));
    j["rank"] = t.rank;
    j["rdim"] = r.total_dim.get_str();
    j["witness"] = json::array();
    j["witness_labels"] = json::array();
    j["per_weight_dims"] = json::array();
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
        j["witness"].push_back(weight_json(r.witness.weights()[i]));
        j["witness_labels"].push_back(r.witness.weights()[i].to_string());
        j["per_weight_dims"].push_back(r.per_weight_dims[i].get_str());
    }
    return j;
}

std::string rdim_csv_row(const SimpleType& t, const RdimResult& r) {
    std::string dims;
    for (std::size_t i = 0; i < r.per_weight_dims.size(); ++i) dims += (i ? "+" : "") + r.per_weight_dims[i].get_str();
    return t.name() + "," + std::string(1, family_letter(t.family)) + "," + std::to_string(t.rank) + "," +
           r.total_dim.get_str() + "," + join_labels(r.witness, "+") + "," + dims;
}

constexpr const char* kRdimCsvHeader = "type,family,rank,rdim,witness,dims";

struct TypeArgs {
    std::string family;
    int rank = 0;

    RootDatum datum() const { return build_root_datum(make_type(parse_family(family), rank)); }
};

void add_type_options(CLI::App* sub, TypeArgs& args) {
    sub->add_option("--family", args.family, "Family letter A..G")->required();
    sub->add_option("--rank", args.rank, "Rank l")->required();
}

const std::vector<std::string> kFamilies = {"lie",        "lie-connected",        "algebraic", "compact-complex",
                                            "hyperbolic", "hyperbolic-stabilizer", "riemannian"};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal faithful representations and Jordan-constant bounds", "liejordan"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    TypeArgs type_args;

    auto* rdim_cmd = app.add_subcommand("rdim", "Minimal faithful representation dimension");
    add_type_options(rdim_cmd, type_args);

    int max_rank = 0;
    auto* table_cmd = app.add_subcommand("table", "rdim for every simple type up to a rank");
    table_cmd->add_option("--max-rank", max_rank, "Largest rank")->required();

    auto* upb_cmd = app.add_subcommand("upb", "Check rdim <= 2^l + 10");
    add_type_options(upb_cmd, type_args);

    std::string weight_text;
    auto* dim_cmd = app.add_subcommand("dim", "Weyl dimension of an irreducible module");
    add_type_options(dim_cmd, type_args);
    dim_cmd->add_option("--weight", weight_text, "Highest weight l1,...,ll")->required();

    std::uint64_t cap = 0;
    bool large_cap = false;
    auto* weights_cmd = app.add_subcommand("weights", "Nonzero dominant weights with dimension <= cap");
    add_type_options(weights_cmd, type_args);
    weights_cmd->add_option("--cap", cap, "Dimension cap")->required();
    weights_cmd->add_flag("--allow-large-cap", large_cap, "Permit caps above 2^budget + 10");

    auto* center_cmd = app.add_subcommand("center", "Center order and nonidentity classes");
    add_type_options(center_cmd, type_args);

    std::string weights_text;
    auto* faithful_cmd = app.add_subcommand("faithful", "Faithfulness of a sum of irreducibles");
    add_type_options(faithful_cmd, type_args);
    faithful_cmd->add_option("--weights", weights_text, "Weights as '1,0,0;0,0,1'")->required();

    std::string bound_family;
    std::uint64_t bound_n = 0, components = 1, max_factorial = BoundLimits{}.max_factorial_arg;
    auto* bound_cmd = app.add_subcommand("bound", "Jordan-constant bound for a family of groups");
    bound_cmd->add_option("--family-of-groups", bound_family, "Family")->required()->check(CLI::IsMember(kFamilies));
    bound_cmd->add_option("--n", bound_n, "Dimension n")->required();
    bound_cmd->add_option("--components", components, "Component count b (lie, algebraic)")
        ->check(CLI::PositiveNumber);
    bound_cmd->add_option("--max-factorial", max_factorial, "Largest factorial evaluated exactly")
        ->capture_default_str();

    std::uint64_t consistency_n = 0;
    auto* consistency_cmd = app.add_subcommand("consistency", "Cross-check family J-arguments against the Lie bound");
    consistency_cmd->add_option("--n", consistency_n, "Dimension n >= 1")->required();

    std::string input_path;
    GroupLimits limits;
    auto* finite_cmd = app.add_subcommand("jordan-finite", "Jordan constant of an explicit finite group");
    finite_cmd->add_option("--input", input_path, "Group file ('perm' or 'table' format)")->required();
    finite_cmd->add_option("--max-order", limits.max_jordan_order, "Largest order for the subgroup lattice")
        ->capture_default_str();
    finite_cmd->add_option("--max-closure-order", limits.max_closure_order, "Largest group order accepted")
        ->capture_default_str();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    const Format fmt = parse_format(format_name);
    try {
        Budget budget = Budget::from_env();
        std::ostringstream buf;

        if (rdim_cmd->parsed()) {
            const auto datum = type_args.datum();
            const auto r = rdim(datum, budget);
            if (fmt == Format::Json) buf << rdim_json(datum.type(), r).dump(2) << '\n';
            else if (fmt == Format::Csv) buf << kRdimCsvHeader << '\n' << rdim_csv_row(datum.type(), r) << '\n';
            else buf << r.total_dim.get_str() << '\n';
        } else if (table_cmd->parsed()) {
            const auto rows = lemma_table(max_rank, budget);
            if (fmt == Format::Json) {
                json j = json::array();
                for (const auto& row : rows) j.push_back(rdim_json(row.type, row.result));
                buf << j.dump(2) << '\n';
            } else if (fmt == Format::Csv) {
                buf << kRdimCsvHeader << '\n';
                for (const auto& row : rows) buf << rdim_csv_row(row.type, row.result) << '\n';
            } else {
                buf << std::left << std::setw(6) << "type" << std::setw(6) << "rank" << std::setw(8) << "rdim"
                    << "witness\n";
                for (const auto& row : rows) {
                    std::string dims;
                    for (std::size_t i = 0; i < row.result.per_weight_dims.size(); ++i)
                        dims += (i ? " + " : "") + row.result.per_weight_dims[i].get_str();
                    buf << std::setw(6) << row.type.name() << std::setw(6) << row.type.rank << std::setw(8)
                        << row.result.total_dim.get_str() << join_labels(row.result.witness, " + ");
                    if (row.result.witness.size() > 1) buf << "  (" << dims << ")";
                    buf << '\n';
                }
            }
        } else if (upb_cmd->parsed()) {
            const auto datum = type_args.datum();
            const auto r = rdim(datum, budget);
            const mpz_class limit = (mpz_class(1) << datum.rank()) + 10;
            const bool ok = r.total_dim <= limit;
            if (fmt == Format::Json) {
                buf << json{{"type", datum.type().name()}, {"rdim", r.total_dim.get_str()},
                            {"limit", limit.get_str()}, {"holds", ok}, {"equality", r.total_dim == limit}}
                           .dump(2)
                    << '\n';
            } else if (fmt == Format::Csv) {
                buf << "type,rdim,limit,holds\n"
                    << datum.type().name() << ',' << r.total_dim.get_str() << ',' << limit.get_str() << ','
                    << (ok ? "true" : "false") << '\n';
            } else {
                buf << (ok ? "true" : "false") << '\n';
            }
        } else if (dim_cmd->parsed()) {
            const auto datum = type_args.datum();
            const auto w = parse_weight(weight_text, datum.rank());
            const auto d = weyl_dim(datum, w);
            if (fmt == Format::Json)
                buf << json{{"type", datum.type().name()}, {"weight", weight_json(w)}, {"dim", d.get_str()}}.dump(2)
                    << '\n';
            else if (fmt == Format::Csv)
                buf << "type,weight,dim\n" << datum.type().name() << ',' << weight_csv(w) << ',' << d.get_str() << '\n';
            else
                buf << readable(d.get_str()) << '\n';
        } else if (weights_cmd->parsed()) {
            const auto datum = type_args.datum();
            budget.allow_large_cap = large_cap;
            const auto list = enumerate_dominant_weights(datum, cap, budget);
            if (fmt == Format::Json) {
                json j = json::array();
                for (const auto& [w, d] : list) j.push_back({{"weight", weight_json(w)}, {"dim", d.get_str()}});
                buf << j.dump(2) << '\n';
            } else if (fmt == Format::Csv) {
                buf << "weight,dim\n";
                for (const auto& [w, d] : list) buf << weight_csv(w) << ',' << d.get_str() << '\n';
            } else {
                for (const auto& [w, d] : list) buf << d.get_str() << ' ' << w.to_string() << '\n';
            }
        } else if (center_cmd->parsed()) {
            const auto datum = type_args.datum();
            const auto order = center_order(datum);
            const auto classes = center_classes(datum);
            if (fmt == Format::Json) {
                json j{{"type", datum.type().name()}, {"order", order.get_str()}, {"classes", json::array()}};
                for (const auto& c : classes) {
                    json row = json::array();
                    for (const auto& q : c.coords) row.push_back(q.get_str());
                    j["classes"].push_back(row);
                }
                buf << j.dump(2) << '\n';
            } else if (fmt == Format::Csv) {
                buf << "type,order,class\n";
                for (const auto& c : classes) {
                    std::string coords;
                    for (std::size_t i = 0; i < c.coords.size(); ++i) coords += (i ? " " : "") + c.coords[i].get_str();
                    buf << datum.type().name() << ',' << order.get_str() << ',' << coords << '\n';
                }
            } else {
                buf << "order " << order.get_str() << '\n';
                for (const auto& c : classes) buf << c.to_string() << '\n';
            }
        } else if (faithful_cmd->parsed()) {
            const auto datum = type_args.datum();
            std::vector<DominantWeight> ws;
            for (const auto& part : split(strip_spaces(weights_text), ';')) ws.push_back(parse_weight(part, datum.rank()));
            const WeightSet set(std::move(ws));
            const bool ok = is_faithful(datum, set);
            if (fmt == Format::Json) {
                json j{{"type", datum.type().name()}, {"weights", json::array()}, {"faithful", ok}};
                for (const auto& w : set.weights()) j["weights"].push_back(weight_json(w));
                buf << j.dump(2) << '\n';
            } else if (fmt == Format::Csv) {
                buf << "type,weights,faithful\n"
                    << datum.type().name() << ',' << join_labels(set, "+") << ',' << (ok ? "true" : "false") << '\n';
            } else {
                buf << (ok ? "true" : "false") << '\n';
            }
        } else if (bound_cmd->parsed()) {
            BoundLimits bl;
            bl.max_factorial_arg = max_factorial;
            if (components != 1 && bound_family != "lie" && bound_family != "algebraic")
                throw InputError("--components applies only to the lie and algebraic families");
            std::optional<mpz_class> argument;
            BoundExpr value = BoundExpr::exact(1);
            if (bound_family == "lie") {
                argument = lie_argument(bound_n);
                value = bound_lie({bound_n, components}, bl);
            } else if (bound_family == "lie-connected") {
                argument = lie_argument(bound_n);
                value = bound_lie_connected(bound_n, bl);
            } else if (bound_family == "algebraic") {
                argument = algebraic_argument(bound_n);
                value = bound_algebraic({bound_n, components}, bl);
            } else if (bound_family == "compact-complex") {
                argument = compact_complex_argument(bound_n);
                value = bound_compact_complex(bound_n, bl);
            } else if (bound_family == "hyperbolic") {
                argument = hyperbolic_argument(bound_n);
                value = bound_hyperbolic(bound_n, bl);
            } else if (bound_family == "hyperbolic-stabilizer") {
                argument = mpz_class(static_cast<unsigned long>(bound_n));
                value = stabilizer_bound_hyperbolic(bound_n, bl);
            } else {
                if (bound_n > 0) argument = riemannian_argument(bound_n);
                value = bound_riemannian(bound_n, bl);
            }
            json conventions = json::array();
            if (!argument || *argument == 0) conventions.push_back("J(0)=1 and n=0 bounds are conventions (trivial group)");
            if (fmt == Format::Json) {
                json j{{"family", bound_family},
                       {"n", bound_n},
                       {"components", components},
                       {"j_argument", argument ? json(argument->get_str()) : json(nullptr)},
                       {"bound", value.to_json()},
                       {"conventions", conventions}};
                buf << j.dump(2) << '\n';
            } else if (fmt == Format::Csv) {
                buf << "family,n,components,j_argument,bound\n"
                    << bound_family << ',' << bound_n << ',' << components << ','
                    << (argument ? argument->get_str() : "") << ',' << value.to_string() << '\n';
            } else {
                buf << (value.is_exact() ? readable(value.value().get_str()) : value.to_string()) << '\n';
            }
        } else if (consistency_cmd->parsed()) {
            const auto rows = consistency_rows(consistency_n);
            if (fmt == Format::Json) {
                json j = json::array();
                for (const auto& r : rows)
                    j.push_back({{"family", r.family},
                                 {"dimension_cap", r.dimension_cap},
                                 {"stated", r.stated.get_str()},
                                 {"via_lie", r.via_lie.get_str()},
                                 {"ok", r.ok()}});
                buf << j.dump(2) << '\n';
            } else if (fmt == Format::Csv) {
                buf << "family,dimension_cap,stated,via_lie,ok\n";
                for (const auto& r : rows)
                    buf << r.family << ',' << r.dimension_cap << ',' << r.stated.get_str() << ','
                        << r.via_lie.get_str() << ',' << (r.ok() ? "true" : "false") << '\n';
            } else {
                for (const auto& r : rows)
                    buf << r.family << " m=" << r.dimension_cap << ' ' << (r.ok() ? "ok" : "MISMATCH") << '\n';
            }
        } else if (finite_cmd->parsed()) {
            const auto group = parse_group(read_file(input_path), limits);
            const auto jr = jordan_constant(group, limits);
            if (fmt == Format::Json) {
                json j{{"order", group.order()},
                       {"jordan_constant", jr.jordan_constant},
                       {"witness_subgroup", jr.witness.elements()},
                       {"b", boundedness_constant(group)}};
                buf << j.dump(2) << '\n';
            } else {
                std::string wit;
                for (std::size_t i = 0; i < jr.witness.elements().size(); ++i)
                    wit += (i ? " " : "") + std::to_string(jr.witness.elements()[i]);
                if (fmt == Format::Csv) {
                    buf << "order,jordan_constant,witness_subgroup,b\n"
                        << group.order() << ',' << jr.jordan_constant << ',' << wit << ','
                        << boundedness_constant(group) << '\n';
                } else {
                    buf << "order " << group.order() << '\n'
                        << "jordan_constant " << jr.jordan_constant << '\n'
                        << "witness_subgroup " << wit << '\n'
                        << "b " << boundedness_constant(group) << '\n';
                }
            }
        }
        out << buf.str();
        return kExitOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace liejordan::cli
