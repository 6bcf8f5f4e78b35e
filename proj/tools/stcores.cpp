#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "stcores/stcores.hpp"

namespace {

using json = nlohmann::ordered_json;
using stcores::EnumOptions;
using stcores::ExactInt;
using stcores::ExactRatio;
using stcores::VerifyRecord;

struct Settings {
    long long s = 0;
    long long t = 0;
    std::string format = "ascii";
    int threads = 1;
    std::uint64_t cap = 100'000'000ULL;
    long long max_sum = 12;
    long long max_s = -1;
    long long max_n = -1;
    std::string ideal_text;
    std::string partition_text;
    std::string partition_arg;
};

int default_thread_count() {
    const char* env = std::getenv("STCORES_THREADS");
    if (!env) return 1;
    int value = 1;
    const char* end = env + std::string_view(env).size();
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value < 0) return 1;
    return value;
}

std::vector<long long> parse_element_list(const std::string& text) {
    std::vector<long long> out;
    if (text.empty() || text == "-") return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + comma, value);
        if (ec != std::errc() || ptr != text.data() + comma || value < 1)
            throw std::invalid_argument("bad element list: '" + text + "'");
        out.push_back(value);
        start = comma + 1;
    }
    return out;
}

std::string join(const std::vector<long long>& values) {
    if (values.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

json string_array(const std::vector<long long>& values) {
    json arr = json::array();
    for (long long v : values) arr.push_back(std::to_string(v));
    return arr;
}

json ratio_json(const ExactRatio& r) {
    return json{{"num", stcores::to_decimal(r.num())}, {"den", stcores::to_decimal(r.den())}};
}

void print_aligned(const std::vector<std::vector<std::string>>& rows,
                   const std::vector<char>& align) {
    std::vector<std::size_t> width(align.size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            const std::size_t pad = width[c] - row[c].size();
            if (align[c] == 'r') line += std::string(pad, ' ');
            line += row[c];
            if (align[c] == 'l' && c + 1 < row.size()) line += std::string(pad, ' ');
        }
        std::cout << line << "\n";
    }
}

EnumOptions enum_options(const Settings& cfg) {
    EnumOptions opt;
    opt.cap = cfg.cap;
    opt.threads = cfg.threads;
    return opt;
}

int run_list(const Settings& cfg) {
    const stcores::GapPoset poset = stcores::build_gap_poset(cfg.s, cfg.t);
    const auto ideals = stcores::enumerate_ideals(poset, enum_options(cfg));

    struct Row {
        std::string ideal, partition, size;
    };
    std::vector<Row> rows;
    ExactInt total = 0, max_size = 0;
    for (const stcores::OrderIdeal& ideal : ideals) {
        const stcores::Partition p = stcores::ideal_to_partition(ideal);
        const ExactInt size = stcores::core_size_of_ideal(ideal);
        total += size;
        max_size = std::max(max_size, size);
        rows.push_back({stcores::to_string(ideal), p.to_string(), stcores::to_decimal(size)});
    }
    const ExactInt count = static_cast<long long>(rows.size());
    const ExactRatio average(total, count);

    if (cfg.format == "csv") {
        std::cout << "ideal;partition;size\n";
        for (const Row& row : rows)
            std::cout << row.ideal << ";" << row.partition << ";" << row.size << "\n";
        return 0;
    }
    if (cfg.format == "json") {
        json doc;
        doc["s"] = std::to_string(poset.s());
        doc["t"] = std::to_string(poset.t());
        json cores = json::array();
        for (const stcores::OrderIdeal& ideal : ideals) {
            json entry;
            entry["ideal"] = string_array(ideal.elements);
            entry["partition"] = string_array(stcores::ideal_to_partition(ideal).parts());
            entry["size"] = stcores::to_decimal(stcores::core_size_of_ideal(ideal));
            cores.push_back(std::move(entry));
        }
        doc["cores"] = std::move(cores);
        doc["stats"] = {{"count", stcores::to_decimal(count)},
                        {"sum_sizes", stcores::to_decimal(total)},
                        {"max_size", stcores::to_decimal(max_size)},
                        {"average", ratio_json(average)}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::vector<std::vector<std::string>> table{{"ideal", "partition", "size"}};
    for (const Row& row : rows) table.push_back({row.ideal, row.partition, row.size});
    print_aligned(table, {'l', 'l', 'r'});
    std::cout << "\n"
              << stcores::to_decimal(count) << " cores, sum of sizes " << stcores::to_decimal(total)
              << ", max size " << stcores::to_decimal(max_size) << ", average size "
              << average.to_string() << "\n";
    return 0;
}

int run_stats(const Settings& cfg) {
    const stcores::CoreStats stats = stcores::core_statistics(cfg.s, cfg.t, enum_options(cfg));
    if (cfg.format == "json") {
        json doc;
        doc["s"] = std::to_string(stats.s);
        doc["t"] = std::to_string(stats.t);
        doc["count"] = stcores::to_decimal(stats.count);
        doc["sum_sizes"] = stcores::to_decimal(stats.sum_sizes);
        doc["max_size"] = stcores::to_decimal(stats.max_size);
        doc["average"] = ratio_json(stats.average);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (cfg.format == "csv") {
        std::cout << "s;t;count;sum_sizes;max_size;average\n"
                  << stats.s << ";" << stats.t << ";" << stcores::to_decimal(stats.count) << ";"
                  << stcores::to_decimal(stats.sum_sizes) << ";"
                  << stcores::to_decimal(stats.max_size) << ";" << stats.average.to_string()
                  << "\n";
        return 0;
    }
    print_aligned({{"s", std::to_string(stats.s)},
                   {"t", std::to_string(stats.t)},
                   {"count", stcores::to_decimal(stats.count)},
                   {"sum_sizes", stcores::to_decimal(stats.sum_sizes)},
                   {"max_size", stcores::to_decimal(stats.max_size)},
                   {"average", stats.average.to_string()}},
                  {'l', 'l'});
    return 0;
}

void append(std::vector<VerifyRecord>& into, std::vector<VerifyRecord> more) {
    for (auto& rec : more) into.push_back(std::move(rec));
}

template <class Fn>
void for_each_coprime_pair(long long max_sum, Fn&& fn) {
    for (long long s = 1; 2 * s < max_sum; ++s)
        for (long long t = s + 1; s + t <= max_sum; ++t)
            if (std::gcd(s, t) == 1) fn(s, t);
}

std::vector<VerifyRecord> verify_target(const std::string& target, const Settings& cfg) {
    const EnumOptions opt = enum_options(cfg);
    std::vector<VerifyRecord> records;
    if (target == "armstrong") {
        if ((cfg.s > 0) != (cfg.t > 0))
            throw CLI::ValidationError("verify armstrong: pass both --s and --t or neither");
        if (cfg.s > 0) {
            append(records, stcores::verify_armstrong(cfg.s, cfg.t, opt));
        } else {
            for_each_coprime_pair(cfg.max_sum, [&](long long s, long long t) {
                append(records, stcores::verify_armstrong(s, t, opt));
            });
        }
    } else if (target == "catalan") {
        const long long max_s = cfg.max_s < 0 ? 8 : cfg.max_s;
        for (long long s = 2; s <= max_s; ++s) {
            records.push_back({"g_brute(" + std::to_string(s) + ")", stcores::g_sigma_brute(s, opt),
                               stcores::g_closed(s)});
            records.push_back({"g_dp(" + std::to_string(s) + ")", stcores::g_sigma_dp(s),
                               stcores::g_closed(s)});
        }
        for (long long s = 2; s <= std::max<long long>(max_s, 100); ++s)
            records.push_back({"g_ratio(" + std::to_string(s) + ")",
                               2 * stcores::g_closed(s),
                               stcores::catalan(s) * stcores::binomial(s + 1, 3)});
    } else if (target == "identities") {
        const long long max_s = cfg.max_s < 0 ? 300 : cfg.max_s;
        for (long long s = 0; s <= std::min<long long>(max_s, 8); ++s) {
            const auto& agg = stcores::ts_brute_aggregates(s);
            records.push_back({"h_brute(" + std::to_string(s) + ")", agg.f_tau,
                               stcores::h_closed(s)});
            records.push_back({"f_brute(" + std::to_string(s) + ")", agg.f_rho,
                               stcores::f_closed(s)});
            records.push_back({"g_brute(" + std::to_string(s) + ")",
                               agg.f_sigma - agg.sum_binom2, stcores::g_closed(s)});
        }
        append(records, stcores::check_wz1(max_s));
        append(records, stcores::check_wz2(max_s));
    } else if (target == "delta") {
        const long long max_n = cfg.max_n < 0 ? 5 : cfg.max_n;
        for (long long n = 1; n <= max_n; ++n) {
            records.push_back({"delta_families(" + std::to_string(n) + ")",
                               stcores::delta_families(n), stcores::delta_closed(n)});
            records.push_back({"delta_enum(" + std::to_string(n) + ")",
                               stcores::delta_enum(n, opt), stcores::delta_closed(n)});
        }
    } else if (target == "s4") {
        const long long max_n = cfg.max_n < 0 ? 200 : cfg.max_n;
        for (long long n = 1; n <= std::min<long long>(max_n, 4); ++n)
            records.push_back({"s4_brute(" + std::to_string(n) + ")",
                               stcores::core_statistics(4, 2 * n + 1, opt).sum_sizes,
                               stcores::s4_total(n)});
        append(records, stcores::check_s4_recurrence(max_n));
    } else if (target == "lemma-st") {
        for_each_coprime_pair(cfg.max_sum, [&](long long s, long long t) {
            const bool ok = stcores::lemma_st_check(s, t, opt);
            records.push_back({"lemma_st(" + std::to_string(s) + "," + std::to_string(t) + ")",
                               ok ? 0 : 1, 0});
        });
    }
    return records;
}

int run_verify(const std::string& target, const Settings& cfg) {
    const std::vector<VerifyRecord> records = verify_target(target, cfg);
    const bool all_equal =
        std::all_of(records.begin(), records.end(), [](const auto& r) { return r.equal(); });

    if (cfg.format == "json") {
        json doc;
        doc["target"] = target;
        json recs = json::array();
        for (const VerifyRecord& rec : records)
            recs.push_back({{"claim", rec.claim},
                            {"lhs", stcores::to_decimal(rec.lhs)},
                            {"rhs", stcores::to_decimal(rec.rhs)},
                            {"equal", rec.equal()}});
        doc["records"] = std::move(recs);
        doc["all_equal"] = all_equal;
        std::cout << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "claim;lhs;rhs;equal\n";
        for (const VerifyRecord& rec : records)
            std::cout << rec.claim << ";" << stcores::to_decimal(rec.lhs) << ";"
                      << stcores::to_decimal(rec.rhs) << ";" << (rec.equal() ? "true" : "false")
                      << "\n";
    } else {
        std::vector<std::vector<std::string>> table;
        for (const VerifyRecord& rec : records)
            table.push_back({rec.claim, stcores::to_decimal(rec.lhs), stcores::to_decimal(rec.rhs),
                             rec.equal() ? "ok" : "MISMATCH"});
        print_aligned(table, {'l', 'r', 'r', 'l'});
        std::cout << (all_equal ? "all checks passed" : "MISMATCH FOUND") << " (" << records.size()
                  << " checks)\n";
    }
    return all_equal ? 0 : 1;
}

int run_bijection(const Settings& cfg, bool have_ideal, bool have_partition) {
    if (have_ideal == have_partition)
        throw CLI::ValidationError("bijection: pass exactly one of --ideal and --partition");

    const stcores::GapPoset poset = stcores::build_gap_poset(cfg.s, cfg.t);
    stcores::OrderIdeal ideal{poset.s(), poset.t(), {}};
    if (have_ideal) {
        ideal = stcores::as_order_ideal(poset, parse_element_list(cfg.ideal_text));
    } else {
        ideal = stcores::partition_to_ideal(stcores::Partition::parse(cfg.partition_text), cfg.s,
                                            cfg.t);
    }
    const stcores::Partition p = stcores::ideal_to_partition(ideal);
    const ExactInt size = stcores::core_size_of_ideal(ideal);

    if (cfg.format == "json") {
        json doc;
        doc["s"] = std::to_string(poset.s());
        doc["t"] = std::to_string(poset.t());
        doc["ideal"] = string_array(ideal.elements);
        doc["partition"] = string_array(p.parts());
        doc["size"] = stcores::to_decimal(size);
        std::cout << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "ideal;partition;size\n"
                  << stcores::to_string(ideal) << ";" << p.to_string() << ";"
                  << stcores::to_decimal(size) << "\n";
    } else {
        print_aligned({{"ideal", stcores::to_string(ideal)},
                       {"partition", p.to_string()},
                       {"size", stcores::to_decimal(size)}},
                      {'l', 'l'});
    }
    return 0;
}

int run_render(const std::string& what, const Settings& cfg) {
    if (cfg.format == "csv")
        throw CLI::ValidationError("render: csv output is not defined for drawings");

    if (what == "young") {
        const stcores::Partition p = stcores::Partition::parse(cfg.partition_arg);
        if (cfg.format == "json") {
            json doc;
            doc["partition"] = string_array(p.parts());
            json hooks = json::array();
            for (const auto& row : stcores::hook_lengths(p)) hooks.push_back(string_array(row));
            doc["hooks"] = std::move(hooks);
            std::cout << doc.dump(2) << "\n";
            return 0;
        }
        const std::string text = stcores::render_young(p);
        if (!text.empty()) std::cout << text << "\n";
        return 0;
    }

    const stcores::GapPoset poset = stcores::build_gap_poset(cfg.s, cfg.t);
    if (cfg.format == "json") {
        json doc;
        doc["s"] = std::to_string(poset.s());
        doc["t"] = std::to_string(poset.t());
        doc["gaps"] = string_array(poset.gaps());
        json covers = json::object();
        for (long long g : poset.gaps())
            covers[std::to_string(g)] = string_array(poset.covers_down(g));
        doc["covers"] = std::move(covers);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    const std::string text = stcores::render_hasse(poset);
    if (!text.empty()) std::cout << text << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Settings cfg;
    cfg.threads = default_thread_count();

    CLI::App app{"(s,t)-core partitions: enumeration, statistics, and exact verification"};
    app.require_subcommand(1);

    const auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"ascii", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--threads", cfg.threads,
                        "worker threads (0 = all cores; default from STCORES_THREADS)");
        sub->add_option("--cap", cfg.cap, "refuse enumerations larger than this")
            ->capture_default_str();
    };

    CLI::App* list = app.add_subcommand("list", "enumerate all (s,t)-cores in canonical order");
    list->add_option("--s", cfg.s)->required();
    list->add_option("--t", cfg.t)->required();
    add_common(list);

    CLI::App* stats = app.add_subcommand("stats", "count, total size, max size, average size");
    stats->add_option("--s", cfg.s)->required();
    stats->add_option("--t", cfg.t)->required();
    add_common(stats);

    CLI::App* verify = app.add_subcommand("verify", "cross-check enumeration, recursions, and closed forms");
    std::string target;
    verify->add_option("target", target, "what to check")
        ->required()
        ->check(CLI::IsMember({"armstrong", "catalan", "identities", "delta", "s4", "lemma-st"}));
    verify->add_option("--s", cfg.s, "single pair: smaller parameter (armstrong)");
    verify->add_option("--t", cfg.t, "single pair: larger parameter (armstrong)");
    verify->add_option("--max-sum", cfg.max_sum, "sweep pairs with s+t up to this (armstrong, lemma-st)")
        ->capture_default_str();
    verify->add_option("--max-s", cfg.max_s, "largest staircase index (catalan: 8, identities: 300)");
    verify->add_option("--max-n", cfg.max_n, "largest family index (delta: 5, s4: 200)");
    add_common(verify);

    CLI::App* bijection = app.add_subcommand("bijection", "map an ideal to its core partition or back");
    bijection->add_option("--s", cfg.s)->required();
    bijection->add_option("--t", cfg.t)->required();
    CLI::Option* ideal_opt =
        bijection->add_option("--ideal", cfg.ideal_text, "comma separated gap values, or -");
    CLI::Option* partition_opt =
        bijection->add_option("--partition", cfg.partition_text, "comma separated parts, or -");
    add_common(bijection);

    CLI::App* render = app.add_subcommand("render", "draw a hook-length grid or a gap poset");
    std::string what;
    render->add_option("what", what, "young or hasse")
        ->required()
        ->check(CLI::IsMember({"young", "hasse"}));
    render->add_option("--partition", cfg.partition_arg, "partition to draw (young)");
    render->add_option("--s", cfg.s, "poset parameter (hasse)");
    render->add_option("--t", cfg.t, "poset parameter (hasse)");
    add_common(render);

    try {
        app.parse(argc, argv);
        if (list->parsed()) return run_list(cfg);
        if (stats->parsed()) return run_stats(cfg);
        if (verify->parsed()) return run_verify(target, cfg);
        if (bijection->parsed())
            return run_bijection(cfg, ideal_opt->count() > 0, partition_opt->count() > 0);
        if (render->parsed()) return run_render(what, cfg);
        return 2;
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const stcores::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const stcores::NotCoprimeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const stcores::NotAGapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const stcores::NotACoreError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
