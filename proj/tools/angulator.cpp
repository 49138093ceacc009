// Command line adapter over the angulator core library.  Subcommands are
// thin: parse arguments, resolve the model, call one library operation,
// print.  Exit codes: 0 success, 1 bad input or unsupported request,
// 2 a theorem check found a counterexample, 3 capacity exceeded.

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "angulator/json_io.hpp"
#include "angulator/model.hpp"
#include "angulator/mutation.hpp"
#include "angulator/pairs.hpp"
#include "angulator/quiver.hpp"
#include "angulator/report.hpp"
#include "angulator/subfactor.hpp"

namespace {

using namespace angulator;

struct ModelArgs {
    int n = 0;
    int d = 0;
    std::string fixture;
    std::string model_file;
    CLI::Option* opt_n = nullptr;
    CLI::Option* opt_d = nullptr;
    CLI::Option* opt_fixture = nullptr;
    CLI::Option* opt_file = nullptr;

    void attach(CLI::App* cmd) {
        opt_n = cmd->add_option("--n", n, "type A model parameter n (requires --d)");
        opt_d = cmd->add_option("--d", d, "type A model parameter d (requires --n)");
        opt_fixture = cmd->add_option("--fixture", fixture, "named fixture model");
        opt_file = cmd->add_option("--model-file", model_file, "explicit model JSON file");
    }

    HomModel resolve(ModelDescriptor& desc) const {
        bool type_a = opt_n->count() > 0 || opt_d->count() > 0;
        int ways = (type_a ? 1 : 0) + (opt_fixture->count() > 0 ? 1 : 0) +
                   (opt_file->count() > 0 ? 1 : 0);
        if (ways != 1)
            throw DomainError("select exactly one model: --n/--d, --fixture, or --model-file");
        if (type_a) {
            if (opt_n->count() == 0 || opt_d->count() == 0)
                throw DomainError("--n and --d must be given together");
            desc.kind = ModelDescriptor::Kind::TypeA;
            desc.params = make_params(n, d);
            return HomModel::type_a(desc.params);
        }
        if (opt_fixture->count() > 0) {
            if (fixture != "example-3-10")
                throw DomainError("unknown fixture \"" + fixture + "\" (available: example-3-10)");
            desc.kind = ModelDescriptor::Kind::Fixture;
            desc.name = fixture;
            return fixture_example_3_10();
        }
        desc.kind = ModelDescriptor::Kind::File;
        desc.name = model_file;
        return load_model_file(model_file);
    }
};

ObjectSet parse_set_arg(const std::string& text, const HomModel& model, const NcCalculus& calc) {
    if (model.is_type_a()) return calc.mask_of(parse_diagonal_set(text, model.params()));
    std::vector<std::string> labels;
    std::string token;
    auto flush = [&]() {
        std::size_t begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos)
            throw ParseError(ParseError::Kind::Malformed, "empty object label in set");
        std::size_t end = token.find_last_not_of(" \t");
        labels.push_back(token.substr(begin, end - begin + 1));
        token.clear();
    };
    bool blank = text.find_first_not_of(" \t") == std::string::npos;
    if (!blank) {
        for (char c : text) {
            if (c == ',') flush();
            else token.push_back(c);
        }
        flush();
    }
    return calc.mask_of_labels(labels);
}

// Runs fn once on the literal argument, or once per stdin line when the
// argument is "-".  Streamed JSON output is compact, one document per line.
void for_each_set(const std::string& set_arg, const std::function<void(const std::string&, int)>& fn) {
    if (set_arg == "-") {
        std::string line;
        while (std::getline(std::cin, line)) fn(line, -1);
    } else {
        fn(set_arg, 2);
    }
}

int finish_check(const CheckReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << report_to_json(report);
    } else {
        std::cout << "theorem " << report.theorem << ": " << (report.passed ? "PASS" : "FAIL")
                  << " (" << report.instances_checked << " instances checked)\n";
        for (const auto& [key, value] : report.counterexample)
            std::cout << "  " << key << " = " << value << "\n";
    }
    return report.passed ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagonal models, weak cotorsion pairs and mutation for "
                 "(d+2)-angulated cluster categories of type A"};
    app.require_subcommand(1);
    int exit_code = 0;

    struct Common {
        ModelArgs model;
        std::string format = "text";
    };
    auto add_common = [](CLI::App* cmd, Common& c, bool with_format = true) {
        c.model.attach(cmd);
        if (with_format)
            cmd->add_option("--format", c.format, "output format")
                ->check(CLI::IsMember({"text", "json"}));
    };

    // objects
    auto objects_args = std::make_shared<Common>();
    {
        auto* cmd = app.add_subcommand("objects", "list the model's objects in canonical order");
        add_common(cmd, *objects_args);
        cmd->callback([objects_args]() {
            ModelDescriptor desc;
            HomModel model = objects_args->model.resolve(desc);
            std::vector<std::string> labels;
            for (int i = 0; i < model.size(); ++i) labels.push_back(model.label(i));
            if (objects_args->format == "json") {
                std::cout << set_result_to_json(desc, "objects", {}, labels);
            } else {
                for (const std::string& s : labels) std::cout << s << "\n";
            }
        });
    }

    // nc
    auto nc_args = std::make_shared<Common>();
    auto nc_set = std::make_shared<std::string>();
    {
        auto* cmd = app.add_subcommand("nc", "the non-crossing complement of a set");
        add_common(cmd, *nc_args);
        cmd->add_option("--set", *nc_set, "diagonal set (\"\" empty, \"-\" one set per stdin line)")
            ->required();
        cmd->callback([nc_args, nc_set]() {
            ModelDescriptor desc;
            HomModel model = nc_args->model.resolve(desc);
            NcCalculus calc(model);
            for_each_set(*nc_set, [&](const std::string& text, int indent) {
                ObjectSet s = parse_set_arg(text, model, calc);
                ObjectSet r = calc.nc(s);
                if (nc_args->format == "json")
                    std::cout << set_result_to_json(desc, "nc", calc.labels_of(s), calc.labels_of(r), indent);
                else
                    std::cout << calc.format_mask(r) << "\n";
            });
        });
    }

    // pairs
    auto pairs_args = std::make_shared<Common>();
    auto pairs_strategy = std::make_shared<std::string>("auto");
    {
        auto* cmd = app.add_subcommand("pairs", "enumerate all weak cotorsion pairs");
        add_common(cmd, *pairs_args);
        cmd->add_option("--strategy", *pairs_strategy, "enumeration strategy")
            ->check(CLI::IsMember({"auto", "brute", "next-closure"}));
        cmd->callback([pairs_args, pairs_strategy]() {
            ModelDescriptor desc;
            HomModel model = pairs_args->model.resolve(desc);
            NcCalculus calc(model);
            EnumerationStrategy strategy;
            if (*pairs_strategy == "brute") strategy = EnumerationStrategy::BruteForce;
            else if (*pairs_strategy == "next-closure") strategy = EnumerationStrategy::NextClosure;
            else strategy = calc.object_count() <= kMaxBruteForceObjects
                                ? EnumerationStrategy::BruteForce
                                : EnumerationStrategy::NextClosure;
            auto pairs = calc.enumerate_weak_cotorsion_pairs(strategy);
            if (pairs_args->format == "json") {
                std::cout << pair_list_to_json(desc, calc, pairs);
            } else {
                for (const auto& p : pairs) {
                    const char* cls = p.x == p.y ? to_string(calc.classify_self_pair(p.x)) : "Mixed";
                    std::cout << "x={" << calc.format_mask(p.x) << "} y={" << calc.format_mask(p.y)
                              << "} core={" << calc.format_mask(p.core) << "} class=" << cls << "\n";
                }
            }
        });
    }

    // classify
    auto classify_args = std::make_shared<Common>();
    auto classify_set = std::make_shared<std::string>();
    {
        auto* cmd = app.add_subcommand("classify", "classify a set as a self-paired set");
        add_common(cmd, *classify_args);
        cmd->add_option("--set", *classify_set, "diagonal set")->required();
        cmd->callback([classify_args, classify_set]() {
            ModelDescriptor desc;
            HomModel model = classify_args->model.resolve(desc);
            NcCalculus calc(model);
            for_each_set(*classify_set, [&](const std::string& text, int indent) {
                ObjectSet s = parse_set_arg(text, model, calc);
                SelfPairClass cls = calc.classify_self_pair(s);
                if (classify_args->format == "json") {
                    std::cout << scalar_result_to_json(desc, "class", calc.labels_of(s),
                                                       to_string(cls), indent);
                } else {
                    std::cout << to_string(cls) << "\n";
                }
            });
        });
    }

    // mutate
    auto mutate_args = std::make_shared<Common>();
    auto mutate_set_arg = std::make_shared<std::string>();
    auto mutate_dset = std::make_shared<std::string>("");
    auto mutate_dir = std::make_shared<std::string>();
    {
        auto* cmd = app.add_subcommand("mutate", "mutate a set at a rigid base");
        add_common(cmd, *mutate_args);
        cmd->add_option("--set", *mutate_set_arg, "set to mutate")->required();
        cmd->add_option("--D", *mutate_dset, "rigid base (default empty)");
        cmd->add_option("--direction", *mutate_dir, "fwd or bwd")
            ->required()
            ->check(CLI::IsMember({"fwd", "bwd"}));
        cmd->callback([mutate_args, mutate_set_arg, mutate_dset, mutate_dir]() {
            ModelDescriptor desc;
            HomModel model = mutate_args->model.resolve(desc);
            NcCalculus calc(model);
            MutationContext ctx = MutationContext::make(calc, parse_set_arg(*mutate_dset, model, calc));
            Direction dir = *mutate_dir == "fwd" ? Direction::Forward : Direction::Backward;
            for_each_set(*mutate_set_arg, [&](const std::string& text, int indent) {
                ObjectSet s = parse_set_arg(text, model, calc);
                ObjectSet r = mutate_set(ctx, s, dir);
                if (mutate_args->format == "json")
                    std::cout << set_result_to_json(desc, "mutated", calc.labels_of(s),
                                                    calc.labels_of(r), indent);
                else
                    std::cout << calc.format_mask(r) << "\n";
            });
        });
    }

    // subfactor
    auto subfactor_args = std::make_shared<Common>();
    auto subfactor_dset = std::make_shared<std::string>("");
    {
        auto* cmd = app.add_subcommand("subfactor", "the subfactor model over a rigid base");
        add_common(cmd, *subfactor_args);
        cmd->add_option("--D", *subfactor_dset, "rigid base (default empty)");
        cmd->callback([subfactor_args, subfactor_dset]() {
            ModelDescriptor desc;
            HomModel model = subfactor_args->model.resolve(desc);
            NcCalculus calc(model);
            SubfactorModel sub = build_subfactor(calc, parse_set_arg(*subfactor_dset, model, calc));
            if (subfactor_args->format == "json") {
                std::cout << subfactor_to_json(desc, sub);
            } else {
                std::cout << "dset: " << (sub.dset() ? calc.format_mask(sub.dset()) : "(empty)") << "\n";
                for (std::size_t ci = 0; ci < sub.cells().size(); ++ci) {
                    std::cout << "cell " << ci << ":";
                    for (int v : sub.cells()[ci]) std::cout << " " << v;
                    std::cout << "\n";
                }
                for (const SubfactorObject& obj : sub.objects())
                    std::cout << sub.parent_model().label(obj.parent_index) << " -> cell " << obj.cell
                              << " as " << format_diagonal(obj.local) << "\n";
            }
        });
    }

    // check
    {
        auto* cmd = app.add_subcommand("check", "exhaustive theorem-shaped checks");
        cmd->require_subcommand(1);

        auto c314 = std::make_shared<Common>();
        auto* s314 = cmd->add_subcommand("thm-3-14", "the pair characterizations agree on all subset pairs");
        add_common(s314, *c314);
        s314->callback([c314, &exit_code]() {
            ModelDescriptor desc;
            HomModel model = c314->model.resolve(desc);
            NcCalculus calc(model);
            exit_code = finish_check(calc.check_theorem_3_14(), c314->format);
        });

        auto c411 = std::make_shared<Common>();
        auto c411_dset = std::make_shared<std::string>("");
        auto* s411 = cmd->add_subcommand("thm-4-11", "parent pairs over a base match the subfactor pairs");
        add_common(s411, *c411);
        s411->add_option("--D", *c411_dset, "rigid base (default empty)");
        s411->callback([c411, c411_dset, &exit_code]() {
            ModelDescriptor desc;
            HomModel model = c411->model.resolve(desc);
            NcCalculus calc(model);
            exit_code = finish_check(check_theorem_4_11(calc, parse_set_arg(*c411_dset, model, calc)),
                                     c411->format);
        });

        auto c413 = std::make_shared<Common>();
        auto c413_dset = std::make_shared<std::string>();
        auto* s413 = cmd->add_subcommand("thm-4-13", "mutation preserves pairs and cores");
        add_common(s413, *c413);
        auto* c413_opt = s413->add_option("--D", *c413_dset, "restrict to one rigid base");
        s413->callback([c413, c413_dset, c413_opt, &exit_code]() {
            ModelDescriptor desc;
            HomModel model = c413->model.resolve(desc);
            NcCalculus calc(model);
            CheckReport report;
            if (c413_opt->count() > 0)
                report = check_theorem_4_13(calc, parse_set_arg(*c413_dset, model, calc));
            else
                report = check_theorem_4_13(calc, true);
            exit_code = finish_check(report, c413->format);
        });

        auto c412 = std::make_shared<Common>();
        auto c412_dset = std::make_shared<std::string>("");
        auto* s412 = cmd->add_subcommand("prop-4-12", "forward and backward mutation are mutually inverse");
        add_common(s412, *c412);
        s412->add_option("--D", *c412_dset, "rigid base (default empty)");
        s412->callback([c412, c412_dset, &exit_code]() {
            ModelDescriptor desc;
            HomModel model = c412->model.resolve(desc);
            NcCalculus calc(model);
            MutationContext ctx = MutationContext::make(calc, parse_set_arg(*c412_dset, model, calc));
            exit_code = finish_check(check_prop_4_12(ctx), c412->format);
        });
    }

    // quiver
    auto quiver_args = std::make_shared<Common>();
    auto quiver_kind = std::make_shared<std::string>("hom");
    {
        auto* cmd = app.add_subcommand("quiver", "emit the hom or ext quiver as Graphviz DOT");
        add_common(cmd, *quiver_args, /*with_format=*/false);
        cmd->add_option("--kind", *quiver_kind, "hom or ext")
            ->check(CLI::IsMember({"hom", "ext"}));
        cmd->callback([quiver_args, quiver_kind]() {
            ModelDescriptor desc;
            HomModel model = quiver_args->model.resolve(desc);
            std::cout << emit_quiver(model, *quiver_kind == "hom" ? QuiverKind::Hom : QuiverKind::Ext);
        });
    }

    try {
        app.parse(argc, argv);
        return exit_code;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "angulator: " << e.what() << "\n";
        return 1;
    } catch (const CapacityError& e) {
        std::cerr << "angulator: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "angulator: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "angulator: " << e.what() << "\n";
        return 1;
    }
}
