#include "hanoi/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hanoi/count.hpp"
#include "hanoi/generator.hpp"
#include "hanoi/move_json.hpp"
#include "hanoi/oracle.hpp"
#include "hanoi/verifier.hpp"

namespace hanoi::cli {

namespace {

struct Options {
    int disks = 0;
    int pegs = 4;
    int max_disks = 0;
    std::string method = "stewart";
    std::string strategy = "optimal";
    std::string format;
    std::string out_path;
    std::string moves_path;
    std::string witness_path;
    std::string layers_path;
    bool splits = false;
    bool count_paths = false;
    std::optional<std::uint64_t> limit;
    std::optional<std::uint64_t> length;
    std::optional<std::uint64_t> memory_budget;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t default_memory_budget()
{
    const char* env = std::getenv(kMemoryBudgetEnv);
    if (!env || !*env)
        return kDefaultMemoryBudget;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used != std::string(env).size())
            throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string(kMemoryBudgetEnv) + " must be a byte count, got '" + env + "'");
    }
}

MoveCount count_for(CountEngine& engine, const std::string& method, int n, int k)
{
    return method == "frame" ? engine.frame(n, k) : engine.stewart(n, k);
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err)
{
    CountEngine engine;
    if (o.method == "frame") {
        auto fc = engine.frame_detailed(o.disks, o.pegs);
        out << fc.moves << '\n';
        if (fc.small_tower_fallback)
            err << "note: fewer disks than pegs; Frame's partition set is empty, using 2n-1\n";
    } else {
        out << engine.stewart(o.disks, o.pegs) << '\n';
    }
    if (o.splits && o.disks > 0)
        for (const auto& plan : engine.optimal_splits(o.disks, o.pegs))
            out << "split " << plan << '\n';
    return kOk;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto strategy = parse_strategy(o.strategy);
    if (!strategy)
        throw UsageError("unknown strategy '" + o.strategy + "'");
    if (*strategy != Strategy::Optimal && o.pegs != 4)
        throw UsageError("strategies s1, s2 and s3 are defined for 4 pegs only");

    MoveSequence seq = *strategy == Strategy::Optimal ? generate_optimal(o.disks, o.pegs)
                                                      : generate_strategy(o.disks, *strategy);

    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file)
            throw UsageError("cannot open '" + o.out_path + "' for writing");
    }
    std::ostream& dest = o.out_path.empty() ? out : file;

    std::uint64_t written = 0;
    const bool text = o.format == "text";
    std::optional<JsonMoveWriter> json;
    if (!text)
        json.emplace(dest);
    for (const Move& m : seq) {
        if (o.limit && written == *o.limit)
            break;
        if (text)
            dest << written << ": disk " << m.disk << " " << m.from << " -> " << m.to << '\n';
        else
            json->write(m);
        ++written;
    }
    if (json)
        json->close();
    if (o.limit && written < seq.declared_length())
        err << "note: truncated to " << written << " of " << seq.declared_length() << " moves\n";
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&)
{
    std::ifstream in(o.moves_path);
    if (!in)
        throw UsageError("cannot open '" + o.moves_path + "'");
    const auto moves = parse_moves_json(in);
    const auto report = replay(o.disks, o.pegs, moves);
    const bool length_ok = !o.length || report.length == *o.length;

    if (o.format == "text") {
        out << "legal: " << (report.legal ? "yes" : "no") << '\n'
            << "reached_goal: " << (report.reached_goal ? "yes" : "no") << '\n'
            << "length: " << report.length << '\n'
            << "midpoint_bifurcation: " << (report.midpoint_bifurcation ? "yes" : "no") << '\n';
        if (report.first_failure)
            out << "first_failure: move " << report.first_failure->index << ": " << report.first_failure->reason
                << '\n';
    } else {
        auto j = to_json(report);
        if (o.length)
            j["expected_length"] = *o.length;
        out << j.dump(2) << '\n';
    }
    return report.legal && report.reached_goal && length_ok ? kOk : kVerificationFailed;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream&)
{
    StateGraph graph({o.disks, o.pegs, o.memory_budget ? *o.memory_budget : default_memory_budget()});
    out << graph.distance() << '\n';
    if (o.count_paths)
        out << "paths " << graph.shortest_path_count() << '\n';
    if (!o.witness_path.empty()) {
        std::ofstream f(o.witness_path);
        if (!f)
            throw UsageError("cannot open '" + o.witness_path + "' for writing");
        write_moves_json(f, graph.witness());
    }
    if (!o.layers_path.empty()) {
        std::ofstream f(o.layers_path);
        if (!f)
            throw UsageError("cannot open '" + o.layers_path + "' for writing");
        write_layers_csv(f, graph.layer_sizes());
    }
    return kOk;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream&)
{
    CountEngine engine;
    const bool md = o.format == "md";
    out << (md ? "| n | T |\n|---|---|\n" : "n,T\n");
    for (int n = 0; n <= o.max_disks; ++n) {
        const auto t = count_for(engine, o.method, n, o.pegs);
        if (md)
            out << "| " << n << " | " << t << " |\n";
        else
            out << n << ',' << t << '\n';
    }
    return kOk;
}

std::string ratio(const MoveCount& num, const MoveCount& den)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(4)
       << static_cast<double>(num.convert_to<long double>() / den.convert_to<long double>());
    return os.str();
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream&)
{
    CountEngine engine;
    const std::vector<std::string> header{"n", "S1", "S2", "S3", "OPTIMAL", "S1/OPT", "S3/OPT"};
    std::vector<std::vector<std::string>> rows;
    for (int n = 0; n <= o.disks; ++n) {
        const auto s1 = engine.strategy_count(n, Strategy::S1);
        const auto s2 = engine.strategy_count(n, Strategy::S2);
        const auto s3 = engine.strategy_count(n, Strategy::S3);
        const auto opt = engine.strategy_count(n, Strategy::Optimal);
        rows.push_back({std::to_string(n), s1.str(), s2.str(), s3.str(), opt.str(), n ? ratio(s1, opt) : "-",
                        n ? ratio(s3, opt) : "-"});
    }

    auto emit = [&](const std::vector<std::string>& cells, const std::vector<std::size_t>& width) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (o.format == "csv") {
                out << (i ? "," : "") << cells[i];
            } else if (o.format == "md") {
                out << "| " << cells[i] << ' ';
            } else {
                out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
            }
        }
        out << (o.format == "md" ? "|\n" : "\n");
    };

    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        width[i] = header[i].size();
        for (const auto& r : rows)
            width[i] = std::max(width[i], r[i].size());
    }
    emit(header, width);
    if (o.format == "md") {
        for (std::size_t i = 0; i < header.size(); ++i)
            out << "|---";
        out << "|\n";
    }
    for (const auto& r : rows)
        emit(r, width);
    return kOk;
}

void add_instance(CLI::App* cmd, Options& o, bool pegs = true)
{
    cmd->add_option("--disks,-n", o.disks, "number of disks")->required()->check(CLI::NonNegativeNumber);
    if (pegs)
        cmd->add_option("--pegs,-k", o.pegs, "number of pegs")->capture_default_str()->check(CLI::Range(3, 64));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Multi-peg Tower of Hanoi: counts, move sequences, verification and BFS oracle", "hanoi"};
    app.require_subcommand(1);
    Options o;

    auto* count = app.add_subcommand("count", "minimum number of moves T(n,k)");
    add_instance(count, o);
    count->add_option("--method", o.method, "recursion to evaluate")
        ->check(CLI::IsMember({"stewart", "frame"}))
        ->capture_default_str();
    count->add_flag("--splits", o.splits, "also print every minimizing block plan");

    auto* solve = app.add_subcommand("solve", "write a move sequence");
    add_instance(solve, o);
    solve->add_option("--strategy", o.strategy, "optimal, s1, s2 or s3")
        ->check(CLI::IsMember({"optimal", "s1", "s2", "s3"}))
        ->capture_default_str();
    solve->add_option("--out,-o", o.out_path, "output file (default stdout)");
    solve->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    solve->add_option("--limit", o.limit, "write at most this many moves");

    auto* verify = app.add_subcommand("verify", "replay a JSON move file");
    add_instance(verify, o);
    verify->add_option("--moves", o.moves_path, "JSON move array")->required();
    verify->add_option("--length", o.length, "expected sequence length");
    verify->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* oracle = app.add_subcommand("oracle", "exhaustive BFS over the state graph");
    add_instance(oracle, o);
    oracle->add_flag("--count-paths", o.count_paths, "count distinct shortest solutions");
    oracle->add_option("--witness", o.witness_path, "write one shortest solution as JSON");
    oracle->add_option("--layers", o.layers_path, "write BFS layer sizes as CSV");
    oracle->add_option("--memory-budget", o.memory_budget,
                       std::string("byte limit (default from ") + kMemoryBudgetEnv + ", else 2 GiB)");

    auto* table = app.add_subcommand("table", "T(n,k) for n = 0..max");
    table->add_option("--max-disks", o.max_disks, "largest n")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--pegs,-k", o.pegs, "number of pegs")->capture_default_str()->check(CLI::Range(3, 64));
    table->add_option("--format", o.format, "csv or md")->check(CLI::IsMember({"csv", "md"}));
    table->add_option("--method", o.method, "stewart or frame")->check(CLI::IsMember({"stewart", "frame"}));

    auto* compare = app.add_subcommand("compare", "four-peg strategy counts for n = 0..N");
    add_instance(compare, o, false);
    compare->add_option("--format", o.format, "text, csv or md")->check(CLI::IsMember({"text", "csv", "md"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidArguments;
    }

    try {
        if (*count) return cmd_count(o, out, err);
        if (*solve) return cmd_solve(o, out, err);
        if (*verify) return cmd_verify(o, out, err);
        if (*oracle) return cmd_oracle(o, out, err);
        if (*table) return cmd_table(o, out, err);
        if (*compare) return cmd_compare(o, out, err);
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const MoveFormatError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const InvalidConfiguration& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    }
    return kInvalidArguments;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hanoi::cli
