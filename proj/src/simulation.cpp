#include "gag/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gag {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

Trial make_trial(const GagCode& code, std::size_t weight, std::mt19937_64& rng) {
    const std::size_t n = code.length();
    if (weight > n) throw std::invalid_argument("make_trial: error weight exceeds n");
    const auto& F = code.tower().base();
    std::uniform_int_distribution<std::uint32_t> symbol(0, static_cast<std::uint32_t>(F.size() - 1));
    std::uniform_int_distribution<std::uint32_t> nonzero(1, static_cast<std::uint32_t>(F.size() - 1));

    Trial t;
    t.message.resize(code.dimension());
    for (auto& s : t.message) s = BaseElem{symbol(rng)};
    t.codeword = code.encode(t.message);
    t.received = t.codeword;

    std::vector<std::size_t> positions(n);
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    for (std::size_t i = 0; i < weight; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(positions[i], positions[pick(rng)]);
        const std::size_t pos = positions[i];
        t.received[pos] = F.add(t.received[pos], BaseElem{nonzero(rng)});
    }
    return t;
}

SimulationReport simulate(const Decoder& decoder, const SimulationConfig& config, std::string label) {
    const GagCode& code = decoder.code();
    if (config.error_weight > code.length()) throw std::invalid_argument("simulate: error weight exceeds n");

    SimulationReport report;
    report.label = std::move(label);
    report.trials = config.trials;
    report.error_weight = config.error_weight;
    report.radius = decoder.radius();
    report.records.resize(config.trials);
    std::vector<double> micros(config.trials, 0.0);

    auto run = [&](std::size_t worker, std::size_t stride) {
        for (std::size_t i = worker; i < config.trials; i += stride) {
            auto rng = trial_rng(config.seed, i);
            const Trial t = make_trial(code, config.error_weight, rng);
            TrialRecord rec;
            rec.trial = i;
            Word error(code.length());
            for (std::size_t j = 0; j < error.size(); ++j) error[j] = code.tower().base().sub(t.received[j], t.codeword[j]);
            rec.lifted_weight = weight(decoder.lift(error).symbols);

            const auto start = std::chrono::steady_clock::now();
            const auto result = decoder.decode(t.received);
            micros[i] = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();

            if (const auto* ok = std::get_if<DecodeSuccess>(&result)) {
                rec.error_count = ok->error_count;
                rec.outcome = ok->message == t.message ? "success" : "miscorrected";
            } else {
                rec.outcome = std::string(to_string(std::get<DecodeFailure>(result).reason));
            }
            report.records[i] = std::move(rec);
        }
    };

    const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(config.threads, config.trials));
    if (threads == 1) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(run, w, threads);
        for (auto& th : pool) th.join();
    }

    for (const auto& rec : report.records) {
        if (rec.outcome == "success") {
            ++report.successes;
        } else {
            ++report.failures[rec.outcome];
        }
        ++report.lifted_histogram[rec.lifted_weight];
    }
    if (config.trials > 0)
        report.mean_decode_us = std::accumulate(micros.begin(), micros.end(), 0.0) / static_cast<double>(config.trials);
    return report;
}

std::string simulation_csv(const SimulationReport& report) {
    std::ostringstream out;
    out << "trial,error_weight,lifted_weight,outcome,errors_reported\n";
    for (const auto& rec : report.records)
        out << rec.trial << ',' << report.error_weight << ',' << rec.lifted_weight << ',' << rec.outcome << ','
            << rec.error_count << '\n';
    return out.str();
}

std::string simulation_summary(const SimulationReport& report) {
    std::ostringstream out;
    out << "code: " << (report.label.empty() ? "(unnamed)" : report.label) << '\n'
        << "trials: " << report.trials << "  error weight: " << report.error_weight
        << "  lifted radius: " << report.radius << '\n'
        << "success: " << report.successes;
    if (report.trials > 0)
        out << " (" << static_cast<double>(report.successes) / static_cast<double>(report.trials) << ")";
    out << '\n';
    for (const auto& [reason, count] : report.failures) out << "failure " << reason << ": " << count << '\n';
    out << "lifted error weights:";
    for (const auto& [w, count] : report.lifted_histogram) out << ' ' << w << 'x' << count;
    out << '\n' << "mean decode time: " << report.mean_decode_us << " us\n";
    return out.str();
}

}  // namespace gag
