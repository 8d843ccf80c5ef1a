#include "eo/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "eo/engine.hpp"
#include "eo/error.hpp"
#include "eo/hadamard.hpp"
#include "eo/signature_io.hpp"
#include "eo/tractable.hpp"

namespace eo::cli {

namespace {

// Ordered key/value lines. `kv` prints key=value; `table` pads the keys.
class Report {
public:
    void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }
    void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
    void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
    void add(std::string key, const BigInt& value) { add(std::move(key), value.str()); }

    void print(std::ostream& out, bool kv) const {
        std::size_t width = 0;
        for (const auto& [k, v] : lines_) {
            width = std::max(width, k.size());
        }
        for (const auto& [k, v] : lines_) {
            if (kv) {
                out << k << '=' << v << '\n';
            } else {
                out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
            }
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

// Thrown for argument problems noticed after CLI11 has parsed.
struct UsageError : Error {
    using Error::Error;
};

std::vector<std::pair<std::size_t, std::size_t>> parse_pairs(const std::string& text) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (text.empty()) {
        return pairs;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        std::size_t a = 0;
        std::size_t b = 0;
        bool ok = colon != std::string::npos;
        if (ok) {
            const char* s = item.data();
            auto ra = std::from_chars(s, s + colon, a);
            auto rb = std::from_chars(s + colon + 1, s + item.size(), b);
            ok = ra.ec == std::errc() && ra.ptr == s + colon && rb.ec == std::errc() && rb.ptr == s + item.size();
        }
        if (!ok) {
            throw UsageError("--pairs: expected i:j, got '" + item + "'");
        }
        pairs.emplace_back(a, b);
    }
    return pairs;
}

std::string kernel_kind(const ClassReport& r) {
    if (!r.kernel) {
        return "none";
    }
    return r.kernel->kind == KernelKind::Trivial ? "trivial" : "hadamard";
}

Polarity polarity_of(const std::string& variant) { return variant[0] == '1' ? Polarity::One : Polarity::Zero; }

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::istream& in;
    bool kv = false;
};

Instance load_instance(const std::string& path, Context& ctx) {
    return parse_instance(read_text_source(path, ctx.in));
}

Signature load_signature(const std::string& path, Context& ctx) {
    return parse_signature(read_text_source(path, ctx.in));
}

void add_result(Report& r, const CountResult& result, bool trace) {
    r.add("count", result.count);
    r.add("method", std::string(to_string(result.method)));
    r.add("steps", result.step_count);
    for (std::size_t i = 0; i < result.notes.size(); ++i) {
        r.add("note." + std::to_string(i + 1), result.notes[i]);
    }
    if (trace) {
        for (std::size_t i = 0; i < result.steps.size(); ++i) {
            r.add("trace." + std::to_string(i + 1), result.steps[i]);
        }
    }
}

void print_warnings(const Instance& inst, Context& ctx) {
    for (const auto& w : validate(inst).warnings) {
        ctx.err << "warning: " << w << '\n';
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Counting Eulerian orientations with EO signatures", "eo"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "table";
    app.add_option("--format", format, "Output style")->check(CLI::IsMember({"table", "kv"}));

    // solve / verify
    std::string instance_path;
    std::string method = "auto";
    bool trace = false;
    BruteOptions brute;
    auto* solve_cmd = app.add_subcommand("solve", "Count the orientations of an instance file");
    solve_cmd->add_option("file", instance_path, "Instance file, or - for stdin")->required();
    solve_cmd->add_option("--method", method)->check(CLI::IsMember({"auto", "brute", "affine", "chain"}));
    solve_cmd->add_flag("--trace", trace, "List the chain reaction steps");
    solve_cmd->add_option("--threads", brute.threads, "Brute force workers (0 = all cores)");
    solve_cmd->add_option("--max-edges", brute.max_edges, "Brute force edge cap");

    auto* verify_cmd = app.add_subcommand("verify", "Compare the polynomial solvers against brute force");
    verify_cmd->add_option("file", instance_path, "Instance file, or - for stdin")->required();
    verify_cmd->add_option("--threads", brute.threads, "Brute force workers (0 = all cores)");
    verify_cmd->add_option("--max-edges", brute.max_edges, "Brute force edge cap");

    // classify
    std::string signature_path;
    auto* classify_cmd = app.add_subcommand("classify", "Report the tractable classes of a signature");
    classify_cmd->add_option("file", signature_path, "Signature file, or - for stdin")->required();

    // gen
    std::string family;
    std::size_t k = 0;
    std::size_t m = 1;
    std::string variant = "1";
    std::string side = "right";
    auto* gen_cmd = app.add_subcommand("gen", "Print a generated signature or matrix");
    gen_cmd->add_option("family", family)
        ->required()
        ->check(CLI::IsMember({"hadamard", "balanced", "butterfly", "wing", "kernel", "sylvester"}));
    gen_cmd->add_option("--k", k, "Order")->required();
    gen_cmd->add_option("--variant", variant, "1 or 0 code; 1b or 0b for the balanced code")
        ->check(CLI::IsMember({"1", "0", "1b", "0b"}));
    gen_cmd->add_option("--m", m, "Repeat every column m times")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--side", side, "Wing half")->check(CLI::IsMember({"left", "right"}));

    // gadget
    std::string left_path;
    std::string right_path;
    std::string pairs_text;
    auto* gadget_cmd = app.add_subcommand("gadget", "Join two signatures by disequality loops");
    gadget_cmd->add_option("--left", left_path, "Signature file")->required();
    gadget_cmd->add_option("--right", right_path, "Signature file")->required();
    gadget_cmd->add_option("--pairs", pairs_text, "Comma separated i:j pairs");

    // census
    std::size_t arity = 0;
    std::optional<std::size_t> max_support;
    bool list = false;
    auto* census_cmd = app.add_subcommand("census", "Exhaustive kernel census over one arity");
    census_cmd->add_option("--arity", arity)->required();
    census_cmd->add_option("--max-support", max_support);
    census_cmd->add_flag("--list", list, "Print every δ1 kernel found");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kUsage;
    }

    Context ctx{out, err, in, format == "kv"};
    Report report;
    int status = kOk;
    try {
        if (*solve_cmd) {
            const Instance inst = load_instance(instance_path, ctx);
            print_warnings(inst, ctx);
            SolveOptions options;
            options.brute = brute;
            options.chain.trace = trace;
            const SolveMethod sm = method == "brute"    ? SolveMethod::Brute
                                   : method == "affine" ? SolveMethod::Affine
                                   : method == "chain"  ? SolveMethod::Chain
                                                        : SolveMethod::Auto;
            add_result(report, solve(inst, sm, options), trace);
        } else if (*verify_cmd) {
            const Instance inst = load_instance(instance_path, ctx);
            print_warnings(inst, ctx);
            SolveOptions options;
            options.brute = brute;
            options.brute.max_edges = std::numeric_limits<std::size_t>::max();
            const CountResult fast = solve(inst, SolveMethod::Auto, options);
            report.add("method", std::string(to_string(fast.method)));
            if (fast.method == CountMethod::Brute) {
                // Brute force ran anyway; there is nothing to compare against.
                if (inst.edges.size() > brute.max_edges) {
                    throw ResourceError("verify: " + std::to_string(inst.edges.size()) + " edges exceed the cap " +
                                        std::to_string(brute.max_edges));
                }
                report.add("brute", fast.count);
                report.add("agreement", std::string("n/a(method brute)"));
            } else {
                report.add("count", fast.count);
                if (inst.edges.size() > brute.max_edges) {
                    report.add("brute", std::string("n/a(edges over cap)"));
                    report.add("agreement", std::string("n/a(brute skipped)"));
                } else {
                    const CountResult slow = brute_force(inst, brute);
                    report.add("brute", slow.count);
                    const bool agree = slow.count == fast.count;
                    report.add("agreement", std::string(agree ? "yes" : "no"));
                    status = agree ? kOk : kMismatch;
                }
            }
        } else if (*classify_cmd) {
            const Signature f = load_signature(signature_path, ctx);
            const ClassReport r = classify(f);
            report.add("arity", f.arity());
            report.add("support", f.size());
            report.add("eo", r.is_eo);
            report.add("affine", r.is_affine);
            report.add("d1_affine", r.in_d1);
            report.add("d0_affine", r.in_d0);
            report.add("d1_kernel", r.is_d1_kernel);
            report.add("d0_kernel", r.is_d0_kernel);
            report.add("kind", kernel_kind(r));
            if (r.kernel) {
                report.add("k", r.kernel->k);
                report.add("m", r.kernel->m);
            }
        } else if (*gen_cmd) {
            const bool balanced_variant = variant.size() == 2;
            if (family == "sylvester") {
                if (variant != "1" || m != 1) {
                    throw UsageError("gen sylvester takes neither --variant nor --m");
                }
                out << sylvester(k).to_string();
                return kOk;
            }
            Signature f;
            if (family == "hadamard") {
                f = balanced_variant ? balanced_code(k, polarity_of(variant)) : hadamard_code(k, polarity_of(variant));
            } else if (family == "balanced") {
                f = balanced_code(k, polarity_of(variant));
            } else {
                if (balanced_variant) {
                    throw UsageError("gen " + family + ": --variant takes 1 or 0");
                }
                if (family == "butterfly") {
                    f = butterfly(k);
                } else if (family == "wing") {
                    const Wings w = wings(k);
                    f = side == "left" ? w.left : w.right;
                } else {
                    f = basic_kernel(k);
                }
                if (variant == "0") {
                    f = complement(f);
                }
            }
            if (m > 1) {
                f = m_multiple(f, m);
            }
            out << format_signature(f);
            return kOk;
        } else if (*gadget_cmd) {
            if (left_path == "-" && right_path == "-") {
                throw UsageError("gadget: only one of --left and --right may read stdin");
            }
            const Signature f = load_signature(left_path, ctx);
            const Signature g = load_signature(right_path, ctx);
            const WeightedSignature h = gadget_demo_hardness(f, g, parse_pairs(pairs_text));
            if (!ctx.kv) {
                out << format_weighted(h);
                return kOk;
            }
            report.add("arity", h.arity());
            report.add("entries", h.values().size());
            report.add("zero_one", h.is_01());
            for (const auto& [row, value] : h.values()) {
                report.add("value." + (h.arity() == 0 ? std::string("()") : row.to_string()), value);
            }
        } else if (*census_cmd) {
            const CensusReport r = kernel_census(arity, max_support);
            report.add("arity", r.arity);
            report.add("max_support", r.max_support);
            report.add("subsets", r.subsets);
            report.add("d1_kernels", r.d1_kernels);
            report.add("d0_kernels", r.d0_kernels);
            report.add("definition_mismatches", r.definition_mismatches);
            report.add("structure_mismatches", r.structure_mismatches);
            const bool agree = r.definition_mismatches == 0 && r.structure_mismatches == 0;
            report.add("agreement", std::string(agree ? "yes" : "no"));
            if (list) {
                for (std::size_t i = 0; i < r.d1_kernel_list.size(); ++i) {
                    std::string rows;
                    for (const auto& row : r.d1_kernel_list[i].support()) {
                        rows += (rows.empty() ? "" : ",") + row.to_string();
                    }
                    report.add("kernel." + std::to_string(i + 1), rows);
                }
            }
            status = agree ? kOk : kMismatch;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    report.print(out, ctx.kv);
    return status;
}

} // namespace eo::cli
