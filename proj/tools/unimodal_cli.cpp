// Command line entry point: exact tables, series dumps and seeded experiments.

#include <fstream>
#include <iostream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "unimodal/enumerate.hpp"
#include "unimodal/experiments.hpp"
#include "unimodal/series.hpp"

using namespace unimodal;

namespace {

struct Options {
    ExperimentConfig config;
    std::size_t order = 60;
    std::string series = "unimodal";
    std::string out;
};

void write_series(std::ostream &os, const Options &o)
{
    const auto &c = o.config;
    TruncatedSeries s(0);
    if (o.series == "partition") {
        s = partition_series(o.order);
    } else if (o.series == "unimodal") {
        s = unimodal_series(o.order);
    } else if (o.series == "strict") {
        s = strongly_unimodal_series(o.order);
    } else if (o.series == "s") {
        s = s_series(static_cast<int>(c.k), static_cast<std::size_t>(c.n), o.order);
    } else if (o.series == "mu") {
        s = mu_series_bell(static_cast<unsigned>(c.k), o.order);
    } else if (o.series == "mp") {
        s = mp_series_recursive(static_cast<unsigned>(c.k), o.order);
    } else {
        throw std::invalid_argument("unknown series '" + o.series + "' (partition, unimodal, strict, s, mu, mp)");
    }
    write_series_csv(os, s);
}

void write_moments(std::ostream &os, const Options &o)
{
    const auto k = static_cast<unsigned>(o.config.k);
    const auto mu_bell = mu_series_bell(k, o.order);
    const auto mu_direct = mu_series_direct(k, o.order);
    const bool with_mp = k >= 1;
    TruncatedSeries mp_rec(0), mp_dir(0);
    if (with_mp) {
        mp_rec = mp_series_recursive(k, o.order);
        mp_dir = mp_series_direct(k, o.order);
    }
    fmt::print(os, "# k={}\n# order={}\n", k, o.order);
    os << "exponent,mu_bell,mu_direct,mp_recursive,mp_direct\n";
    for (std::size_t i = 0; i <= o.order; ++i) {
        os << i << ',' << mu_bell[i] << ',' << mu_direct[i] << ',';
        if (with_mp) {
            os << mp_rec[i] << ',' << mp_dir[i];
        } else {
            os << ',';
        }
        os << '\n';
    }
    const bool mu_ok = mu_bell == mu_direct;
    const bool mp_ok = !with_mp || mp_rec == mp_dir;
    fmt::print(os, "summary,moment-identity,mu-bell-equals-direct,{},0,{}\n", mu_ok ? 1 : 0, mu_ok ? "pass" : "fail");
    fmt::print(os, "summary,moment-recursion,mp-recursive-equals-direct,{},0,{}\n", mp_ok ? 1 : 0,
               mp_ok ? "pass" : "fail");
}

int dispatch(const std::string &command, const Options &o, std::ostream &os)
{
    if (command == "count") {
        write_count_table_csv(os, o.config.n, o.config.kind());
    } else if (command == "series") {
        write_series(os, o);
    } else if (command == "moments") {
        write_moments(os, o);
    } else {
        ExperimentConfig c = o.config;
        c.name = command;
        write_report(os, run_experiment(c));
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact counts, samplers and limit-law experiments for unimodal sequences"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"count", "u_m(n) table for one n"},
        {"series", "coefficients of a generating function"},
        {"moments", "peak moment series two ways"},
        {"sample", "exact-size samples"},
        {"pk", "peak vs Gumbel"},
        {"pk-exact", "exact peak law vs local formula"},
        {"largeparts", "largest parts and peak vs joint law"},
        {"smallparts", "small part multiplicities"},
        {"skew", "left-right small part difference"},
        {"totalsmall", "total small parts on each side"},
        {"rank", "rank vs logistic"},
        {"asymp", "saddle-point and global count accuracy"},
    };
    for (const auto &[name, help] : commands) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("--n", o.config.n, "size")->capture_default_str();
        sub->add_option("--samples", o.config.samples, "number of exact-size samples")->capture_default_str();
        sub->add_option("--seed", o.config.seed, "master seed")->capture_default_str();
        sub->add_option("--order", o.order, "series truncation order")->capture_default_str();
        sub->add_option("--k", o.config.k, "part size or moment index")->capture_default_str();
        sub->add_option("--t", o.config.t, "number of largest parts")->capture_default_str();
        sub->add_option("--kn", o.config.kn, "small part cutoff")->capture_default_str();
        sub->add_flag("--strict", o.config.strict, "strongly unimodal sequences");
        sub->add_option("--out", o.out, "output file (default stdout)");
        sub->add_option("--workers", o.config.workers, "sampling threads")->capture_default_str();
        if (name == "series") {
            sub->add_option("--name", o.series, "partition, unimodal, strict, s, mu or mp")->capture_default_str();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        if (o.out.empty()) {
            return dispatch(command, o, std::cout);
        }
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot open " + o.out);
        }
        const int rc = dispatch(command, o, file);
        file.close();
        if (!file) {
            throw std::runtime_error("write failed for " + o.out);
        }
        return rc;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
