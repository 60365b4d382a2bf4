#include "lrx/cli.hpp"

#include "lrx/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace lrx {

namespace {

using ojson = nlohmann::ordered_json;

FieldSpec parse_field_flag(const std::string& text) {
    if (text == "Q") return FieldSpec::rationals();
    constexpr std::string_view prefix = "Fp:";
    if (text.rfind(prefix, 0) == 0) {
        std::uint64_t p = 0;
        std::string digits = text.substr(prefix.size());
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error(Error::Code::parse, "bad --field value '" + text + "'");
        p = std::stoull(digits);
        return FieldSpec::prime_field(p);
    }
    throw Error(Error::Code::parse, "bad --field value '" + text + "' (expected Q or Fp:N)");
}

struct ResolvedInput {
    std::string name;
    Document doc;
};

ResolvedInput resolve_input(const std::string& input, const std::optional<FieldSpec>& field) {
    constexpr std::string_view demo_prefix = "demo:";
    if (input.rfind(demo_prefix, 0) == 0) {
        BuiltinInstance inst =
            builtin_instance(input.substr(demo_prefix.size()), field.value_or(FieldSpec::rationals()));
        return {input, document_of(inst)};
    }
    std::ifstream in(input, std::ios::binary);
    if (!in) throw Error(Error::Code::parse, "cannot read file '" + input + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return {input, parse_document(buf.str(), field)};
}

void write_output(const std::string& text, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(output_path, std::ios::binary);
    if (!f) throw Error(Error::Code::parse, "cannot write file '" + output_path + "'");
    f << text;
}

std::string index_labels(const CrossedDatum& d, const std::string& spaces,
                         const std::vector<std::size_t>& tuple) {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ", ";
        s += spaces[i] == 'U' ? d.U.label(tuple[i]) : d.H.label(tuple[i]);
    }
    return s + ")";
}

std::string index_tuple(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

ojson sparse_json(const Tensor& t) {
    ojson entries = ojson::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.flat(i).is_zero()) continue;
        ojson e = ojson::array();
        for (std::size_t ix : t.unflatten(i)) e.push_back(ix);
        e.push_back(t.flat(i).str());
        entries.push_back(std::move(e));
    }
    return entries;
}

ojson field_report_json(const FieldSpec& f) {
    ojson j;
    j["kind"] = f.kind == FieldKind::rationals ? "Q" : "Fp";
    if (f.kind == FieldKind::prime_field) j["p"] = f.p;
    return j;
}

// display width of UTF-8 text, counting code points
std::size_t ulen(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

int cmd_check(const CrossedDatum& datum, const std::string& name, const FieldSpec& field,
              std::size_t max_counterexamples, bool json_report, std::ostream& out) {
    AxiomReport report = check_all(datum, max_counterexamples);
    if (json_report) {
        ojson j;
        j["format"] = "lrx-report/1";
        j["command"] = "check";
        j["input"] = name;
        j["field"] = field_report_json(field);
        j["axiom_count"] = axiom_count;
        j["all_hold"] = report.all_hold;
        ojson axioms = ojson::array();
        for (const AxiomResult& r : report.results) {
            ojson a;
            a["id"] = r.axiom_id;
            a["label"] = r.label;
            a["holds"] = r.holds;
            ojson ws = ojson::array();
            for (const AxiomWitness& w : r.witnesses) {
                ojson wj;
                wj["part"] = w.part;
                wj["input_names"] = axiom_input_names(r.axiom_id, w.part);
                wj["inputs"] = w.inputs;
                wj["first_diff"] = w.first_diff;
                wj["lhs"] = sparse_json(w.lhs);
                wj["rhs"] = sparse_json(w.rhs);
                ws.push_back(std::move(wj));
            }
            a["witnesses"] = std::move(ws);
            axioms.push_back(std::move(a));
        }
        j["axioms"] = std::move(axioms);
        out << j.dump(1) << "\n";
        return report.all_hold ? 0 : 1;
    }

    out << "instance: " << name << "\n";
    out << "field: " << field.name() << "\n";
    std::size_t held = 0;
    for (const AxiomResult& r : report.results) {
        out << r.label;
        for (std::size_t pad = r.label.size(); pad < 7; ++pad) out << ' ';
        if (r.holds) {
            out << "holds\n";
            ++held;
            continue;
        }
        out << "FAILS";
        for (const AxiomWitness& w : r.witnesses) {
            out << "  [part " << (w.part + 1) << "/" << axiom_part_count(r.axiom_id) << "] ("
                << axiom_input_names(r.axiom_id, w.part) << ") = "
                << index_labels(datum, axiom_input_spaces(r.axiom_id, w.part), w.inputs)
                << ", first diff at " << index_tuple(w.first_diff) << ": lhs = "
                << w.lhs.at(w.first_diff) .str()
                << ", rhs = " << w.rhs.at(w.first_diff).str();
        }
        out << "\n";
    }
    out << (report.all_hold ? "all axioms hold" : "FAILED") << " (" << held << "/" << axiom_count
        << ")\n";
    return report.all_hold ? 0 : 1;
}

int cmd_assoc(const CrossedDatum& datum, const std::string& name, const FieldSpec& field,
              std::size_t max_counterexamples, bool json_report, std::ostream& out) {
    Algebra product = build_crossed_product(datum, /*require_axioms=*/false);
    ValidationReport report = validate_algebra(product, max_counterexamples);
    const std::size_t triples = product.dim * product.dim * product.dim;
    if (json_report) {
        ojson j;
        j["format"] = "lrx-report/1";
        j["command"] = "assoc";
        j["input"] = name;
        j["field"] = field_report_json(field);
        j["dim"] = product.dim;
        j["triples"] = triples;
        j["ok"] = report.ok;
        ojson fails = ojson::array();
        for (const LawFailure& f : report.failures) {
            ojson fj;
            fj["law"] = std::string(law_name(f.law));
            fj["witness"] = f.witness;
            fj["lhs"] = sparse_json(f.lhs);
            fj["rhs"] = sparse_json(f.rhs);
            fails.push_back(std::move(fj));
        }
        j["failures"] = std::move(fails);
        out << j.dump(1) << "\n";
        return report.ok ? 0 : 1;
    }
    out << "instance: " << name << "\n";
    out << "field: " << field.name() << "\n";
    out << "product dimension: " << product.dim << "\n";
    out << "associativity checked over " << triples << " basis triples, unit laws over "
        << product.dim << " basis vectors\n";
    if (report.ok) {
        out << "associative and unital\n";
        return 0;
    }
    for (const LawFailure& f : report.failures) {
        out << law_name(f.law) << " FAILS at " << index_tuple(f.witness) << ": lhs = "
            << format_element(f.lhs, product.basis_labels) << ", rhs = "
            << format_element(f.rhs, product.basis_labels) << "\n";
    }
    return 1;
}

int cmd_table(const Algebra& a, std::ostream& out) {
    const std::size_t n = a.dim;
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = a.label(i);

    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    std::vector<std::size_t> width(n);
    for (std::size_t j = 0; j < n; ++j) width[j] = ulen(labels[j]);
    std::size_t head = 0;
    for (std::size_t i = 0; i < n; ++i) head = std::max(head, ulen(labels[i]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Tensor row(a.field, {n});
            for (std::size_t k = 0; k < n; ++k) row.set_flat(k, a.mu.at({i, j, k}));
            cells[i][j] = format_element(row, a.basis_labels);
            width[j] = std::max(width[j], ulen(cells[i][j]));
        }

    auto pad = [&](const std::string& s, std::size_t w) {
        std::string r = s;
        for (std::size_t k = ulen(s); k < w; ++k) r += ' ';
        return r;
    };
    out << pad("", head) << " |";
    for (std::size_t j = 0; j < n; ++j) out << " " << pad(labels[j], width[j]);
    out << "\n";
    std::string rule(head, '-');
    out << rule << "-+";
    for (std::size_t j = 0; j < n; ++j) out << std::string(width[j] + 1, '-');
    out << "\n";
    for (std::size_t i = 0; i < n; ++i) {
        out << pad(labels[i], head) << " |";
        for (std::size_t j = 0; j < n; ++j) out << " " << pad(cells[i][j], width[j]);
        out << "\n";
    }
    return 0;
}

Tensor parse_coords(const std::string& text, const FieldSpec& field, std::size_t dim) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace((unsigned char)c)) {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != dim)
        throw Error(Error::Code::parse, "expected " + std::to_string(dim) + " coordinates, got " +
                                            std::to_string(parts.size()));
    Tensor t(field, {dim});
    for (std::size_t i = 0; i < dim; ++i) t.set_flat(i, parse_scalar(parts[i], field));
    return t;
}

std::string coords_text(const Tensor& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += t.flat(i).str();
    }
    return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computer algebra for crossed products on U (x) H"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string field_flag;
    app.add_option("--field", field_flag, "coefficient field: Q or Fp:N")->capture_default_str();

    std::string input, output_path, coords_a, coords_b, demo_name;
    std::size_t max_counterexamples = 1;
    bool json_report = false, no_require_axioms = false;

    CLI::App* check = app.add_subcommand("check", "run the axiom suite on a datum");
    check->add_option("input", input, "document path or demo:NAME")->required();
    check->add_flag("--json-report", json_report, "machine-readable report");
    check->add_option("--max-counterexamples", max_counterexamples, "witnesses per axiom")
        ->check(CLI::PositiveNumber);

    CLI::App* build = app.add_subcommand("build", "write the crossed product algebra document");
    build->add_option("input", input, "document path or demo:NAME")->required();
    build->add_option("-o,--output", output_path, "output path (default stdout)");
    build->add_flag("--no-require-axioms", no_require_axioms, "skip the axiom gate");

    CLI::App* assoc = app.add_subcommand("assoc", "validate the built product exhaustively");
    assoc->add_option("input", input, "document path or demo:NAME")->required();
    assoc->add_flag("--json-report", json_report, "machine-readable report");
    assoc->add_option("--max-counterexamples", max_counterexamples, "witnesses per law")
        ->check(CLI::PositiveNumber);

    CLI::App* table = app.add_subcommand("table", "print the product multiplication table");
    table->add_option("input", input, "document path or demo:NAME")->required();
    table->add_flag("--no-require-axioms", no_require_axioms, "skip the axiom gate");

    CLI::App* mul = app.add_subcommand("mul", "multiply two coordinate vectors");
    mul->add_option("input", input, "document path or demo:NAME")->required();
    mul->add_option("a", coords_a, "left factor, comma-separated scalars")->required();
    mul->add_option("b", coords_b, "right factor, comma-separated scalars")->required();

    CLI::App* demo = app.add_subcommand("demo", "write a builtin instance document");
    demo->add_option("name", demo_name, "builtin instance name")->required();
    demo->add_option("-o,--output", output_path, "output path (default stdout)");

    std::vector<const char*> argv;
    argv.push_back("lrx");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::optional<FieldSpec> field_override;
        if (!field_flag.empty()) field_override = parse_field_flag(field_flag);

        if (app.got_subcommand(demo)) {
            std::string name = demo_name;
            constexpr std::string_view prefix = "demo:";
            if (name.rfind(prefix, 0) == 0) name = name.substr(prefix.size());
            BuiltinInstance inst =
                builtin_instance(name, field_override.value_or(FieldSpec::rationals()));
            write_output(serialize_document(document_of(inst)), output_path, out);
            return 0;
        }

        ResolvedInput in = resolve_input(input, field_override);
        const FieldSpec field = in.doc.field;

        if (app.got_subcommand(check))
            return cmd_check(materialize_datum(in.doc), in.name, field, max_counterexamples,
                             json_report, out);

        if (app.got_subcommand(assoc))
            return cmd_assoc(materialize_datum(in.doc), in.name, field, max_counterexamples,
                             json_report, out);

        if (app.got_subcommand(build)) {
            Algebra product = build_crossed_product(materialize_datum(in.doc), !no_require_axioms);
            write_output(serialize_document(document_of(std::move(product))), output_path, out);
            return 0;
        }

        if (app.got_subcommand(table)) {
            if (std::holds_alternative<Algebra>(in.doc.payload))
                return cmd_table(std::get<Algebra>(in.doc.payload), out);
            return cmd_table(build_crossed_product(materialize_datum(in.doc), !no_require_axioms),
                             out);
        }

        if (app.got_subcommand(mul)) {
            if (std::holds_alternative<Algebra>(in.doc.payload)) {
                const Algebra& a = std::get<Algebra>(in.doc.payload);
                Tensor x = parse_coords(coords_a, field, a.dim);
                Tensor y = parse_coords(coords_b, field, a.dim);
                out << coords_text(multiply(a, x, y)) << "\n";
                return 0;
            }
            CrossedDatum datum = materialize_datum(in.doc);
            Tensor x = parse_coords(coords_a, field, datum.product_dim());
            Tensor y = parse_coords(coords_b, field, datum.product_dim());
            out << coords_text(crossed_multiply(datum, x, y)) << "\n";
            return 0;
        }

        err << "error: no command\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        const bool mathematical = e.code() == Error::Code::axiom_failure ||
                                  e.code() == Error::Code::not_associative;
        return mathematical ? 1 : 2;
    }
}

}  // namespace lrx
