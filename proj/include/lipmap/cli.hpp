#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lipmap/error.hpp"
#include "lipmap/extend.hpp"
#include "lipmap/graph.hpp"
#include "lipmap/io.hpp"
#include "lipmap/lhom.hpp"
#include "lipmap/mapping.hpp"
#include "lipmap/maxrange.hpp"
#include "lipmap/oracle.hpp"
#include "lipmap/range_extend.hpp"

/// The `lipmap` command line. `run` is the whole program minus process
/// plumbing, so tests drive it in-process.
namespace lipmap::cli {

enum ExitCode : int {
    kAnswered = 0,
    kNegative = 1, // only with --status-exit
    kInputError = 2,
    kResourceError = 3,
};

using Json = nlohmann::ordered_json;

struct Options {
    std::string graph_path;
    std::string pins_path;
    std::string full_path;
    std::string dump_path;
    Value M = 1;
    Value r = 1;
    bool strong = false;
    bool witness = false;
    bool tree = false;
    bool json = false;
    bool linear_scan = false;
    bool wr = false;
    bool translate = false;
    bool status_exit = false;
    std::optional<Vertex> root;
    std::optional<std::uint64_t> limit;
    std::uint64_t budget = oracle::kDefaultBudget;
};

namespace detail {

    class Context {
    public:
        Context(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

        template <class Reader>
        auto read(const std::string& path, Reader&& reader)
        {
            if (path == "-") {
                if (stdin_used_)
                    throw InputError("stdin ('-') can be used for one file only");
                stdin_used_ = true;
                return reader(in_, std::string("<stdin>"));
            }
            std::ifstream file(path);
            if (!file)
                throw InputError(path + ": cannot open file");
            return reader(file, path);
        }

        Graph graph()
        {
            return read(opt_.graph_path, [](std::istream& is, const std::string& name) {
                return io::read_edge_list(is, name);
            });
        }

        PartialMapping mapping(const std::string& path, const Graph& g)
        {
            return read(path, [&](std::istream& is, const std::string& name) {
                return io::read_mapping(is, name, g.order());
            });
        }

        Json envelope(const Graph& g) const
        {
            Json j;
            j["graph"] = {{"n", g.order()}, {"m", g.size()}};
            j["M"] = opt_.M;
            j["strong"] = opt_.strong;
            return j;
        }

        int emit_json(Json j, const Json& result, bool negative)
        {
            j["result"] = result;
            out_ << j.dump() << '\n';
            return finish(negative);
        }

        int finish(bool negative) const { return negative && opt_.status_exit ? kNegative : kAnswered; }

        std::ostream& out() { return out_; }
        const Options& opt() const { return opt_; }

    private:
        const Options& opt_;
        std::istream& in_;
        std::ostream& out_;
        bool stdin_used_ = false;
    };

    inline std::string join(const std::vector<Value>& values)
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < values.size(); ++i)
            os << (i ? " " : "") << values[i];
        return os.str();
    }

    inline Json mapping_json(const FullMapping& f)
    {
        return {{"root", f.root}, {"values", f.values}};
    }

    inline void print_mapping(std::ostream& os, const FullMapping& f)
    {
        os << "root: " << f.root << '\n' << "mapping: " << join(f.values) << '\n';
    }

    inline std::string reason_name(FailureReason r)
    {
        switch (r) {
        case FailureReason::not_reachable: return "NOT_REACHABLE";
        case FailureReason::no_root_candidate: return "NO_ROOT_CANDIDATE";
        case FailureReason::empty_interval: return "EMPTY_INTERVAL";
        case FailureReason::prescribed_conflict: return "PRESCRIBED_CONFLICT";
        case FailureReason::not_bipartite: return "NOT_BIPARTITE";
        }
        return "UNKNOWN";
    }

    inline Json failure_json(const NotExtendable& f, Value M)
    {
        Json j{{"status", "NOT_EXTENDABLE"}, {"reason", reason_name(f.reason)}};
        std::vector<Vertex> where;
        if (f.u >= 0)
            where.push_back(f.u);
        if (f.v >= 0)
            where.push_back(f.v);
        j["vertices"] = where;
        j["message"] = describe(f, M);
        return j;
    }

    inline int cmd_maxrange(Context& ctx)
    {
        const auto& opt = ctx.opt();
        auto g = ctx.graph();
        std::optional<FullMapping> witness;
        std::optional<Value> value;
        if (opt.strong) {
            if (auto s = max_range_strong(g, opt.M)) {
                value = s->value;
                witness = s->witness;
            }
        } else {
            value = max_range(g, opt.M);
            witness = max_range_witness(g, opt.M);
        }
        if (opt.json) {
            Json result;
            result["maxrange"] = value ? Json(*value) : Json(nullptr);
            if (opt.witness && witness) {
                result["witness"] = mapping_json(*witness);
                result["distinct"] = range_of(*witness);
                result["span"] = span_of(*witness);
            }
            return ctx.emit_json(ctx.envelope(g), result, !value);
        }
        auto& out = ctx.out();
        if (!value) {
            out << "maxrange: NONE\n";
            return ctx.finish(true);
        }
        out << "maxrange: " << *value << '\n';
        if (opt.witness) {
            out << "witness: " << join(witness->values) << '\n'
                << "root: " << witness->root << '\n'
                << "distinct: " << range_of(*witness) << '\n'
                << "span: " << span_of(*witness) << '\n';
        }
        return ctx.finish(false);
    }

    inline int report_extension(Context& ctx, const Graph& g, const ExtensionResult& result, const std::string& label)
    {
        const auto& opt = ctx.opt();
        if (opt.json) {
            Json j = result ? Json{{"status", "EXTENDED"}, {"mapping", mapping_json(result.mapping())}}
                            : failure_json(result.failure(), opt.M);
            return ctx.emit_json(ctx.envelope(g), j, !result);
        }
        auto& out = ctx.out();
        if (!result) {
            out << label << "NOT_EXTENDABLE: " << describe(result.failure(), opt.M) << '\n';
            return ctx.finish(true);
        }
        out << label << "EXTENDED\n";
        print_mapping(out, result.mapping());
        return ctx.finish(false);
    }

    inline int cmd_extend(Context& ctx)
    {
        const auto& opt = ctx.opt();
        auto g = ctx.graph();
        auto pins = ctx.mapping(opt.pins_path, g);
        if (opt.strong && opt.tree)
            throw InputError("--tree and --strong cannot be combined");
        auto result = opt.strong ? extend_strong(g, pins, opt.M)
                      : opt.tree ? extend_on_tree(g, pins, opt.M)
                                 : extend_general(g, pins, opt.M);
        return report_extension(ctx, g, result, "");
    }

    inline int cmd_fixed_range(Context& ctx)
    {
        const auto& opt = ctx.opt();
        auto g = ctx.graph();
        auto pins = ctx.mapping(opt.pins_path, g);
        auto result = fixed_range_extend(g, pins, opt.M, opt.r);
        const char* status = result.status == FixedRangeResult::Status::found    ? "FOUND"
                             : result.status == FixedRangeResult::Status::absent ? "ABSENT"
                                                                                 : "UNKNOWN";
        const bool negative = result.status == FixedRangeResult::Status::absent;
        if (opt.json) {
            Json j{{"status", status}, {"range", opt.r}};
            if (result.witness)
                j["mapping"] = mapping_json(*result.witness);
            return ctx.emit_json(ctx.envelope(g), j, negative);
        }
        auto& out = ctx.out();
        if (!result.found()) {
            out << "fixed-range: " << status << '\n';
            return ctx.finish(negative);
        }
        out << "fixed-range: " << opt.r << '\n';
        print_mapping(out, *result.witness);
        return ctx.finish(false);
    }

    inline int cmd_max_range_ext(Context& ctx)
    {
        const auto& opt = ctx.opt();
        auto g = ctx.graph();
        auto pins = ctx.mapping(opt.pins_path, g);
        auto result = max_range_extend(g, pins, opt.M, opt.linear_scan ? MaxRangeSearch::linear : MaxRangeSearch::binary);
        if (opt.json) {
            Json j = result ? Json{{"status", "EXTENDED"}, {"range", result->range}, {"exact", result->exact},
                                   {"mapping", mapping_json(result->witness)}}
                            : Json{{"status", "NOT_EXTENDABLE"}};
            return ctx.emit_json(ctx.envelope(g), j, !result);
        }
        auto& out = ctx.out();
        if (!result) {
            out << "max-range-ext: NOT_EXTENDABLE\n";
            return ctx.finish(true);
        }
        out << "max-range-ext: " << result->range << '\n';
        if (!result->exact)
            out << "exact: no\n";
        print_mapping(out, result->witness);
        return ctx.finish(false);
    }

    inline int cmd_count(Context& ctx)
    {
        const auto& opt = ctx.opt();
        if (!opt.root)
            throw InputError("count depends on the root; pass --root");
        auto g = ctx.graph();
        auto count = oracle::count_mappings(g, *opt.root, {opt.M, opt.strong}, opt.budget);
        if (opt.json)
            return ctx.emit_json(ctx.envelope(g), Json{{"root", *opt.root}, {"count", count}}, false);
        ctx.out() << "count: " << count << '\n';
        return ctx.finish(false);
    }

    inline int cmd_avgrange(Context& ctx)
    {
        const auto& opt = ctx.opt();
        auto g = ctx.graph();
        const Vertex root = opt.root.value_or(0);
        auto s = oracle::stats(g, root, {opt.M, opt.strong}, opt.budget);
        auto avg = s.avg_range().reduced();
        if (opt.json) {
            Json j{{"root", root},
                   {"count", s.count},
                   {"avgrange", {{"num", avg.num}, {"den", avg.den}}},
                   {"max_distinct", s.max_range_distinct},
                   {"max_span", s.max_span}};
            return ctx.emit_json(ctx.envelope(g), j, false);
        }
        auto& out = ctx.out();
        out << "avgrange: " << avg.to_string() << " (" << std::fixed << std::setprecision(6) << avg.to_double()
            << ")\n";
        out << "count: " << s.count << '\n'
            << "max-distinct: " << s.max_range_distinct << '\n'
            << "max-span: " << s.max_span << '\n';
        return ctx.finish(false);
    }

    inline int cmd_enumerate(Context& ctx)
    {
        const auto& opt = ctx.opt();
        auto g = ctx.graph();
        const Vertex root = opt.root.value_or(0);
        std::vector<FullMapping> found;
        oracle::for_each_mapping(g, root, {opt.M, opt.strong}, [&](const FullMapping& f) {
            if (opt.limit && found.size() >= *opt.limit)
                return false;
            found.push_back(f);
            return true;
        }, opt.budget);
        if (opt.json) {
            Json list = Json::array();
            for (const auto& f : found)
                list.push_back(f.values);
            return ctx.emit_json(ctx.envelope(g), Json{{"root", root}, {"mappings", list}}, false);
        }
        for (const auto& f : found)
            ctx.out() << join(f.values) << '\n';
        ctx.out() << "enumerated: " << found.size() << '\n';
        return ctx.finish(false);
    }

    /// A mapping file, or the JSON printed by another subcommand: the first
    /// object among result.mapping, result.witness, result and the document
    /// itself that carries a "values" array.
    inline std::pair<FullMapping, std::optional<Vertex>> read_full_mapping(std::istream& is, const std::string& name,
                                                                           int order)
    {
        std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
        FullMapping f;
        std::optional<Vertex> root;
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            Json doc;
            try {
                doc = Json::parse(text);
            } catch (const Json::parse_error& e) {
                throw InputError(name + ": " + e.what());
            }
            const Json* found = nullptr;
            for (const Json* node : {&doc, doc.contains("result") ? &doc["result"] : nullptr}) {
                if (!node || !node->is_object())
                    continue;
                for (const char* key : {"mapping", "witness"})
                    if (node->contains(key) && (*node)[key].contains("values"))
                        found = &(*node)[key];
                if (!found && node->contains("values"))
                    found = node;
            }
            if (!found || !(*found)["values"].is_array())
                throw InputError(name + ": no mapping in JSON document");
            try {
                f.values = (*found)["values"].get<std::vector<Value>>();
                if (found->contains("root"))
                    root = (*found)["root"].get<Vertex>();
            } catch (const Json::exception& e) {
                throw InputError(name + ": " + e.what());
            }
        } else {
            std::istringstream body(text);
            for (const auto& kv : io::read_mapping(body, name, order))
                f.values.push_back(kv.second);
        }
        if (static_cast<int>(f.values.size()) != order)
            throw InputError(name + ": mapping assigns " + std::to_string(f.values.size()) + " of "
                             + std::to_string(order) + " vertices");
        if (root && (*root < 0 || *root >= order))
            throw InputError(name + ": root " + std::to_string(*root) + " out of range");
        return {std::move(f), root};
    }

    inline int cmd_check(Context& ctx)
    {
        const auto& opt = ctx.opt();
        auto g = ctx.graph();
        auto [f, json_root] = ctx.read(opt.full_path, [&](std::istream& is, const std::string& name) {
            return read_full_mapping(is, name, g.order());
        });
        if (opt.root) {
            f.root = *opt.root;
        } else if (json_root) {
            f.root = *json_root;
        } else {
            auto zero = std::find(f.values.begin(), f.values.end(), 0);
            f.root = zero == f.values.end() ? 0 : static_cast<Vertex>(zero - f.values.begin());
        }
        auto validity = is_valid(g, f, {opt.M, opt.strong});
        auto& out = ctx.out();
        if (validity)
            out << "VALID\n";
        else if (validity.failure == Validity::Failure::root_not_zero)
            out << "INVALID: root " << f.root << " is mapped to " << f[f.root] << '\n';
        else
            out << "INVALID: edge (" << validity.edge->first << "," << validity.edge->second << ")\n";
        if (opt.wr)
            out << "widom-rowlinson: " << (is_widom_rowlinson(g, f) ? "yes" : "no") << '\n';
        return ctx.finish(!validity);
    }

    inline int cmd_lhom(Context& ctx)
    {
        const auto& opt = ctx.opt();
        auto g = ctx.graph();
        auto pins = ctx.mapping(opt.pins_path, g);
        Value shift = 0;
        if (opt.translate && !pins.empty()) {
            auto [lo, hi] = std::minmax_element(pins.begin(), pins.end(),
                                                [](const auto& a, const auto& b) { return a.second < b.second; });
            shift = -(lo->second + (hi->second - lo->second) / 2);
            for (auto& kv : pins)
                kv.second += shift;
        }
        auto inst = lhom::build_instance(g, pins, opt.M, opt.strong);
        if (!opt.dump_path.empty()) {
            std::ofstream dump(opt.dump_path);
            if (!dump)
                throw InputError(opt.dump_path + ": cannot write instance dump");
            lhom::write_instance(dump, inst);
        }
        const bool rooted = !opt.translate;
        auto solution = lhom::solve(inst, rooted);
        std::optional<ExtensionResult> direct;
        if (rooted)
            direct = opt.strong ? extend_strong(g, pins, opt.M) : extend_general(g, pins, opt.M);

        if (solution)
            for (auto& x : solution->values)
                x -= shift;
        if (opt.json) {
            Json j{{"status", solution ? (rooted ? "EXTENDED" : "UNROOTED") : "NONE"}};
            if (solution)
                j["values"] = solution->values;
            if (solution && solution->root)
                j["root"] = *solution->root;
            if (direct) {
                j["direct"] = direct->extended() ? "EXTENDED" : "NOT_EXTENDABLE";
                j["agree"] = direct->extended() == solution.has_value();
            }
            return ctx.emit_json(ctx.envelope(g), j, !solution);
        }
        auto& out = ctx.out();
        if (!solution) {
            out << "lhom: NONE\n";
        } else {
            out << "lhom: " << (rooted ? "EXTENDED" : "UNROOTED") << '\n';
            if (solution->root)
                out << "root: " << *solution->root << '\n';
            out << "mapping: " << join(solution->values) << '\n';
        }
        if (direct) {
            out << "direct: " << (direct->extended() ? "EXTENDED" : "NOT_EXTENDABLE") << '\n'
                << "agree: " << (direct->extended() == solution.has_value() ? "yes" : "no") << '\n';
        }
        return ctx.finish(!solution);
    }

} // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Lipschitz mappings of graphs: maximum range, partial extension, enumeration", "lipmap"};
    app.require_subcommand(1);
    app.add_flag("--status-exit", opt.status_exit, "Exit 1 on negative answers");
    app.fallthrough();

    auto graph_opt = [&](CLI::App* sub) {
        sub->add_option("-g,--graph", opt.graph_path, "Edge list file ('-' for stdin)")->required();
        sub->add_option("-M", opt.M, "Lipschitz constant")->required()->check(CLI::PositiveNumber);
    };
    auto pins_opt = [&](CLI::App* sub) {
        sub->add_option("-p,--pins", opt.pins_path, "Prescribed values file")->required();
    };
    auto json_opt = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Machine-readable output"); };
    auto strong_opt = [&](CLI::App* sub) { sub->add_flag("--strong", opt.strong, "Every edge changes by exactly M"); };

    auto* maxrange = app.add_subcommand("maxrange", "Maximum range and a witness");
    graph_opt(maxrange);
    strong_opt(maxrange);
    maxrange->add_flag("--witness", opt.witness, "Print the witness mapping");
    json_opt(maxrange);

    auto* extend = app.add_subcommand("extend", "Extend a partial mapping");
    graph_opt(extend);
    pins_opt(extend);
    strong_opt(extend);
    extend->add_flag("--tree", opt.tree, "Use the tree algorithm (graph must be a tree)");
    json_opt(extend);

    auto* fixed = app.add_subcommand("fixed-range", "Extension with a prescribed range");
    graph_opt(fixed);
    pins_opt(fixed);
    fixed->add_option("-r", opt.r, "Required range")->required()->check(CLI::PositiveNumber);
    json_opt(fixed);

    auto* maxext = app.add_subcommand("max-range-ext", "Extension with the largest range");
    graph_opt(maxext);
    pins_opt(maxext);
    maxext->add_flag("--linear-scan", opt.linear_scan, "Scan ranges downward instead of binary search");
    json_opt(maxext);

    std::vector<CLI::App*> oracle_cmds{
        app.add_subcommand("count", "Number of mappings (exhaustive)"),
        app.add_subcommand("avgrange", "Average range (exhaustive)"),
        app.add_subcommand("enumerate", "List all mappings in lexicographic order"),
    };
    for (auto* sub : oracle_cmds) {
        graph_opt(sub);
        strong_opt(sub);
        sub->add_option("--root", opt.root, "Root vertex");
        sub->add_option("--limit", opt.limit, "Stop after this many mappings");
        sub->add_option("--budget", opt.budget, "Abort after this many mappings");
        json_opt(sub);
    }

    auto* check = app.add_subcommand("check", "Validate a full mapping");
    graph_opt(check);
    check->add_option("-f,--mapping", opt.full_path, "Full mapping file")->required();
    check->add_option("--root", opt.root, "Root vertex (default: first vertex mapped to 0)");
    strong_opt(check);
    check->add_flag("--wr", opt.wr, "Also report the Widom-Rowlinson property");

    auto* lhom_cmd = app.add_subcommand("lhom", "Solve the list-homomorphism reduction and cross-check");
    graph_opt(lhom_cmd);
    pins_opt(lhom_cmd);
    strong_opt(lhom_cmd);
    lhom_cmd->add_option("--dump-instance", opt.dump_path, "Write the instance to PATH");
    lhom_cmd->add_flag("--translate", opt.translate, "Shift prescribed values into range; drops the root condition");
    json_opt(lhom_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kAnswered : kInputError;
    }

    detail::Context ctx(opt, in, out);
    try {
        auto* sub = app.get_subcommands().front();
        const auto& name = sub->get_name();
        if (name == "maxrange")
            return detail::cmd_maxrange(ctx);
        if (name == "extend")
            return detail::cmd_extend(ctx);
        if (name == "fixed-range")
            return detail::cmd_fixed_range(ctx);
        if (name == "max-range-ext")
            return detail::cmd_max_range_ext(ctx);
        if (name == "count")
            return detail::cmd_count(ctx);
        if (name == "avgrange")
            return detail::cmd_avgrange(ctx);
        if (name == "enumerate")
            return detail::cmd_enumerate(ctx);
        if (name == "check")
            return detail::cmd_check(ctx);
        return detail::cmd_lhom(ctx);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResourceError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

} // namespace lipmap::cli
