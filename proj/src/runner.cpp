#include "gnlink/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gnlink/error.hpp"
#include "gnlink/nli_oracle.hpp"
#include "gnlink/optimizer.hpp"
#include "gnlink/shaping.hpp"
#include "gnlink/svg_plot.hpp"
#include "gnlink/units.hpp"

namespace fs = std::filesystem;

namespace gnlink {

namespace {

std::string fmt(double v) {
    std::ostringstream o;
    o.precision(12);
    o << v;
    return o.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write output file: " + path.string());
    out << content;
}

fs::path out_dir(const SimulationConfig& config) {
    fs::path dir(config.output_directory);
    fs::create_directories(dir);
    return dir;
}

// Shaping is deterministic but not cheap; memoize per process.
const Constellation& shaped_cached(int m, double snr_db, std::uint64_t seed, int iters) {
    static std::mutex mutex;
    static std::map<std::tuple<int, long long, std::uint64_t, int>, Constellation> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_tuple(m, llround(snr_db * 1e6), seed, iters);
    auto it = cache.find(key);
    if (it == cache.end()) {
        ShapingOptions opts;
        opts.restarts = m == 6 ? 2 : 3;  // the 64-point search is 16x dearer per probe
        Constellation shaped =
            shape_constellation(m, db_to_linear(snr_db), seed, iters, opts);
        it = cache.emplace(key, std::move(shaped)).first;
    }
    return it->second;
}

Constellation constellation_for(const ModulationChoice& choice, const SimulationConfig& config) {
    using Kind = ModulationChoice::Kind;
    switch (choice.kind) {
        case Kind::Qpsk: return Constellation::gray_qam(2);
        case Kind::Qam16: return Constellation::gray_qam(4);
        case Kind::Qam64: return Constellation::gray_qam(6);
        case Kind::Shaped16:
            return shaped_cached(4, config.shaping_snr_16_db, config.shaping_seed,
                                 config.shaping_iters);
        case Kind::Shaped64:
            return shaped_cached(6, config.shaping_snr_64_db, config.shaping_seed,
                                 config.shaping_iters);
        case Kind::File: return Constellation::load(choice.file);
    }
    throw ConfigError("unknown modulation choice");
}

} // namespace

BandFormats resolve_formats(const SimulationConfig& config, const ChannelPlan& plan,
                            bool build_tables) {
    BandFormats fmts;
    fmts.per_band.resize(3);
    const ModulationChoice* choices[3] = {&config.mod_s, &config.mod_c, &config.mod_l};
    for (int b = 0; b < 3; ++b) fmts.per_band[b] = constellation_for(*choices[b], config);

    if (build_tables) {
        fmts.tables.resize(3);
        for (int b = 0; b < 3; ++b)
            fmts.tables[b] = GmiTable(fmts.per_band[b], -20.0, 35.0, 0.1, 10);
    }

    fmts.bits_per_channel.resize(plan.size());
    fmts.kurtosis_per_channel.resize(plan.size());
    fmts.table_per_channel.resize(plan.size(), nullptr);
    for (std::size_t i = 0; i < plan.size(); ++i) {
        int b = static_cast<int>(plan.at(i).band);
        fmts.bits_per_channel[i] = fmts.per_band[b].bits_per_symbol();
        fmts.kurtosis_per_channel[i] = excess_kurtosis(fmts.per_band[b]);
        if (build_tables) fmts.table_per_channel[i] = &fmts.tables[b];
    }
    return fmts;
}

std::vector<double> launch_from_config(const SimulationConfig& config, const ChannelPlan& plan) {
    if (config.power_mode == "flat")
        return std::vector<double>(plan.size(), config.flat_dbm);

    std::ifstream in(config.power_file);
    if (!in) throw ConfigError("cannot open power file: " + config.power_file);
    std::vector<double> dbm(plan.size(), 0.0);
    std::vector<bool> seen(plan.size(), false);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double idx_d, value;
        if (!(ss >> idx_d >> value)) continue;  // header or junk line
        auto idx = static_cast<std::size_t>(idx_d);
        if (idx >= plan.size())
            throw ConfigError("power.file: channel index out of range: " + std::to_string(idx));
        dbm[idx] = value;
        seen[idx] = true;
    }
    for (std::size_t i = 0; i < plan.size(); ++i)
        if (!seen[i])
            throw ConfigError("power.file: missing channel " + std::to_string(i));
    return dbm;
}

void write_config_echo(const SimulationConfig& config) {
    write_file(out_dir(config) / "resolved.cfg", config.echo());
}

namespace {

SimReport simulate_impl(const SimulationConfig& config, const ChannelPlan& plan,
                        const LinkSpec& link, const BandFormats& formats,
                        const std::vector<double>& powers_dbm, bool write_outputs) {
    PowerVector watts(plan.size());
    for (std::size_t i = 0; i < plan.size(); ++i) watts[i] = dbm_to_watt(powers_dbm[i]);

    PropagationResult prop = propagate_link(plan, watts, link, formats.kurtosis_per_channel,
                                            config.format_correction,
                                            config.epsilon_override());

    const std::size_t n = plan.size();
    std::vector<double> gmi_bits(n), ngmi_vals(n);
    GmiMethod method = GmiMethod::gauss_hermite(10);
    for (std::size_t i = 0; i < n; ++i) {
        int b = static_cast<int>(plan.at(i).band);
        gmi_bits[i] = gmi(formats.per_band[b], prop.snr.snr_linear[i], method).bits;
        ngmi_vals[i] = ngmi(gmi_bits[i], formats.bits_per_channel[i]);
    }

    RateAssignment assignment = select_code_rates(ngmi_vals, formats.bits_per_channel,
                                                  plan.at(0).bandwidth_hz, config.k_rates);

    SimReport report;
    report.scenario = prop.snr.scenario;
    report.assignment = assignment;
    report.total_throughput_bps = assignment.total_throughput_bps;
    report.rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Channel& ch = plan.at(i);
        ChannelRow row;
        row.index = ch.index;
        row.freq_thz = ch.abs_frequency_hz / 1e12;
        row.wavelength_nm = frequency_to_wavelength(ch.abs_frequency_hz) * 1e9;
        row.band = band_name(ch.band);
        row.launch_dbm = powers_dbm[i];
        row.snr_db = prop.snr.snr_db[i];
        row.gmi_bits = gmi_bits[i];
        row.ngmi = ngmi_vals[i];
        row.rate = assignment.per_channel_rate[i];
        row.throughput_gbps = 2.0 * ch.bandwidth_hz * formats.bits_per_channel[i] *
                              assignment.per_channel_rate[i] / 1e9;
        report.rows.push_back(row);
        report.gmi_bound_bps += 2.0 * ch.bandwidth_hz * gmi_bits[i];
        report.band_throughput_bps[static_cast<int>(ch.band)] += row.throughput_gbps * 1e9;
    }

    if (write_outputs) {
        fs::path dir = out_dir(config);
        std::ostringstream ch;
        ch << "index,freq_thz,wavelength_nm,band,launch_dbm,snr_db,gmi_bits,ngmi,rate,"
              "throughput_gbps\n";
        for (const ChannelRow& r : report.rows) {
            ch << r.index << ',' << fmt(r.freq_thz) << ',' << fmt(r.wavelength_nm) << ','
               << r.band << ',' << fmt(r.launch_dbm) << ',' << fmt(r.snr_db) << ','
               << fmt(r.gmi_bits) << ',' << fmt(r.ngmi) << ',' << fmt(r.rate) << ','
               << fmt(r.throughput_gbps) << '\n';
        }
        write_file(dir / "channels.csv", ch.str());

        std::ostringstream sum;
        sum << "scenario,k_rates,total_throughput_tbps,gmi_bound_tbps,s_band_tbps,c_band_tbps,"
               "l_band_tbps\n";
        sum << report.scenario << ',' << config.k_rates << ','
            << fmt(report.total_throughput_bps / 1e12) << ',' << fmt(report.gmi_bound_bps / 1e12)
            << ',' << fmt(report.band_throughput_bps[0] / 1e12) << ','
            << fmt(report.band_throughput_bps[1] / 1e12) << ','
            << fmt(report.band_throughput_bps[2] / 1e12) << '\n';
        write_file(dir / "summary.csv", sum.str());

        std::ostringstream fa, fb;
        fa << "freq_thz,snr_db\n";
        fb << "freq_thz,launch_dbm\n";
        for (const ChannelRow& r : report.rows) {
            fa << fmt(r.freq_thz) << ',' << fmt(r.snr_db) << '\n';
            fb << fmt(r.freq_thz) << ',' << fmt(r.launch_dbm) << '\n';
        }
        write_file(dir / "fig2a_snr.csv", fa.str());
        write_file(dir / "fig2b_power.csv", fb.str());

        if (config.write_profile) {
            PowerProfile profile = solve_raman_ode(plan, watts, link.fiber);
            std::ostringstream pf;
            pf << "z_m";
            for (std::size_t i = 0; i < n; ++i) pf << ",ch" << i;
            pf << '\n';
            for (std::size_t zi = 0; zi < profile.n_z(); ++zi) {
                pf << fmt(profile.z_samples()[zi]);
                for (std::size_t i = 0; i < n; ++i) pf << ',' << fmt(profile.power(zi, i));
                pf << '\n';
            }
            write_file(dir / "profile.csv", pf.str());
        }

        if (config.render_plots) {
            std::vector<double> freq(n), snr(n), launch(n);
            for (std::size_t i = 0; i < n; ++i) {
                freq[i] = report.rows[i].freq_thz;
                snr[i] = report.rows[i].snr_db;
                launch[i] = report.rows[i].launch_dbm;
            }
            SvgPlot pa("SNR after transmission", "frequency (THz)", "SNR (dB)");
            pa.add_series(report.scenario, freq, snr);
            pa.save((dir / "fig2a_snr.svg").string());
            SvgPlot pb("Launch power", "frequency (THz)", "launch power (dBm)");
            pb.add_series(report.scenario, freq, launch);
            pb.save((dir / "fig2b_power.svg").string());
        }

        write_config_echo(config);
    }
    return report;
}

} // namespace

SimReport run_simulate(const SimulationConfig& config,
                       const std::optional<std::vector<double>>& powers_dbm,
                       bool write_outputs) {
    ChannelPlan plan = config.build_plan();
    LinkSpec link = config.build_link(plan.size());
    BandFormats formats = resolve_formats(config, plan, false);
    std::vector<double> dbm = powers_dbm ? *powers_dbm : launch_from_config(config, plan);
    if (dbm.size() != plan.size())
        throw ConfigError("run_simulate: power vector length mismatch");
    return simulate_impl(config, plan, link, formats, dbm, write_outputs);
}

OptimizeReport run_optimize(const SimulationConfig& config, bool write_outputs) {
    ChannelPlan plan = config.build_plan();
    LinkSpec link = config.build_link(plan.size());
    BandFormats formats = resolve_formats(config, plan, true);

    ThroughputObjective objective(plan, link, formats.kurtosis_per_channel,
                                  formats.table_per_channel, config.format_correction,
                                  config.epsilon_override());

    PsoConfig pso_config;
    pso_config.swarm_size = config.swarm;
    pso_config.iterations = config.iterations;
    pso_config.inertia = config.inertia;
    pso_config.cognitive = config.cognitive;
    pso_config.social = config.social;
    pso_config.seed = config.optimizer_seed;

    OptimizerBounds bounds;
    bounds.offset_min_dbm = config.offset_min;
    bounds.offset_max_dbm = config.offset_max;
    bounds.tilt_min_db = config.tilt_min;
    bounds.tilt_max_db = config.tilt_max;
    bounds.channel_min_dbm = config.channel_min;
    bounds.channel_max_dbm = config.channel_max;

    PsoResult swarm = pso([&](const PowerParam& p) { return objective.evaluate_param(p); },
                          pso_config, bounds);

    GradientOptions gopts;
    gopts.step_db = config.gradient_step_db;
    gopts.tol_bps = config.gradient_tol_tbps * 1e12;
    gopts.max_iters = config.gradient_max_iters;
    GradientResult refined = refine_gradient(
        [&](const std::vector<double>& dbm) { return objective.evaluate_dbm(dbm); },
        expand_power_param(swarm.best, plan), bounds, gopts);

    OptimizeReport report;
    report.optimum_dbm = refined.powers_dbm;
    report.pso_objective_bps = swarm.best_objective;
    report.refined_objective_bps = refined.objective;

    if (write_outputs) {
        fs::path dir = out_dir(config);
        std::ostringstream tr;
        tr << "iter,best_objective_tbps,param0,param1,param2,param3,param4,param5\n";
        for (const PsoTracePoint& t : swarm.trace) {
            tr << t.iteration << ',' << fmt(t.best_objective / 1e12);
            for (double p : t.best_param) tr << ',' << fmt(p);
            tr << '\n';
        }
        write_file(dir / "trace.csv", tr.str());

        std::ostringstream op;
        op << "index,launch_dbm\n";
        for (std::size_t i = 0; i < report.optimum_dbm.size(); ++i)
            op << i << ',' << fmt(report.optimum_dbm[i]) << '\n';
        write_file(dir / "optimum_powers.csv", op.str());
    }

    report.simulation = simulate_impl(config, plan, link, formats, report.optimum_dbm,
                                      write_outputs);
    return report;
}

RateSweepReport run_rate_sweep(const SimulationConfig& config, const std::vector<int>& k_list,
                               bool write_outputs) {
    if (k_list.empty()) throw ConfigError("run_rate_sweep: K list must not be empty");
    ChannelPlan plan = config.build_plan();
    LinkSpec link = config.build_link(plan.size());
    BandFormats formats = resolve_formats(config, plan, false);
    std::vector<double> dbm = launch_from_config(config, plan);

    PowerVector watts(plan.size());
    for (std::size_t i = 0; i < plan.size(); ++i) watts[i] = dbm_to_watt(dbm[i]);
    PropagationResult prop = propagate_link(plan, watts, link, formats.kurtosis_per_channel,
                                            config.format_correction,
                                            config.epsilon_override());

    std::vector<double> ngmi_vals(plan.size());
    GmiMethod method = GmiMethod::gauss_hermite(10);
    RateSweepReport report;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        int b = static_cast<int>(plan.at(i).band);
        double g = gmi(formats.per_band[b], prop.snr.snr_linear[i], method).bits;
        ngmi_vals[i] = ngmi(g, formats.bits_per_channel[i]);
        report.gmi_bound_bps += 2.0 * plan.at(i).bandwidth_hz * g;
    }

    for (int k : k_list) {
        RateAssignment a = select_code_rates(ngmi_vals, formats.bits_per_channel,
                                             plan.at(0).bandwidth_hz, k);
        report.rows.push_back({k, a.total_throughput_bps});
    }

    if (write_outputs) {
        fs::path dir = out_dir(config);
        std::ostringstream o;
        o << "k,throughput_tbps\n";
        for (const RateSweepRow& r : report.rows)
            o << r.k << ',' << fmt(r.throughput_bps / 1e12) << '\n';
        o << "bound," << fmt(report.gmi_bound_bps / 1e12) << '\n';
        write_file(dir / "rate_sweep.csv", o.str());

        if (config.render_plots) {
            std::vector<double> xs, ys;
            for (const RateSweepRow& r : report.rows) {
                xs.push_back(r.k);
                ys.push_back(r.throughput_bps / 1e12);
            }
            SvgPlot pc("Throughput vs number of code rates", "number of code rates",
                       "throughput (Tb/s)");
            pc.add_series("quantized", xs, ys);
            std::vector<double> bx = {xs.front(), xs.back()};
            std::vector<double> by = {report.gmi_bound_bps / 1e12, report.gmi_bound_bps / 1e12};
            pc.add_series("GMI bound", bx, by);
            pc.save((dir / "fig2c_rates.svg").string());
        }
        write_config_echo(config);
    }
    return report;
}

ValidationReport run_validate(const SimulationConfig& config, bool write_outputs) {
    ValidationReport report;

    // 1. Raman conservation: lossless 20-channel plan over 10 THz.
    {
        std::vector<Channel> channels;
        double f_center = wavelength_to_frequency(1540e-9);
        for (int i = 0; i < 20; ++i) {
            Channel ch;
            ch.index = i;
            ch.offset_frequency_hz = (i - 9.5) * 500e9;
            ch.abs_frequency_hz = f_center + ch.offset_frequency_hz;
            ch.bandwidth_hz = 50e9;
            ch.band = Band::C;
            channels.push_back(ch);
        }
        ChannelPlan plan(channels, f_center);
        FiberSpec fiber;
        fiber.attenuation_np_m = 0.0;
        fiber.attenuation_bar_np_m = 0.0;
        fiber.raman_slope_cr = raman_slope_to_si(config.raman_slope_w_km_thz);
        fiber.span_length_m = config.span_length_km * 1e3;
        fiber.rk4_step_m = config.rk4_step_m;
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> pw(0.2e-3, 2e-3);
        PowerVector launch(plan.size());
        for (double& p : launch) p = pw(rng);
        double total0 = 0.0;
        for (double p : launch) total0 += p;
        PowerProfile profile = solve_raman_ode(plan, launch, fiber);
        double worst = 0.0;
        for (std::size_t zi = 0; zi < profile.n_z(); ++zi) {
            double total = 0.0;
            for (std::size_t i = 0; i < plan.size(); ++i) total += profile.power(zi, i);
            worst = std::max(worst, std::abs(total - total0) / total0);
        }
        report.checks.push_back({"raman_conservation", worst <= 1e-6,
                                 "max relative drift " + fmt(worst)});
    }

    // 2. Closed form vs the integral oracle on a small C-band instance.
    {
        SimulationConfig small = config;
        small.attenuation_table_db_km.clear();
        PlanRequest req;
        req.channels_per_band = {0, 5, 0};
        req.symbol_rate_hz = 50e9;
        req.center_wavelength_m = 1540e-9;
        ChannelPlan plan = build_channel_plan(req);
        LinkSpec link = small.build_link(plan.size());
        link.n_spans = 1;
        PowerVector launch(plan.size(), 1e-3);
        PowerProfile profile = solve_raman_ode(plan, launch, link.fiber, 141);
        EffectiveRamanFit fit = fit_effective_cr(profile, plan, launch, link.fiber);
        std::vector<double> gaussian(plan.size(), 0.0);
        NliReport closed = eta_closed_form(plan, launch, link.fiber, fit, gaussian);
        OracleQuadrature quad{config.oracle_n_mc, config.oracle_seed};
        double worst_gap = 0.0;
        for (std::size_t i = 0; i < plan.size(); ++i) {
            OracleResult oracle = eta_oracle(plan, launch, link.fiber, profile, i, quad);
            double gap = std::abs(10.0 * std::log10(closed.eta_total(i) / oracle.eta));
            worst_gap = std::max(worst_gap, gap);
        }
        report.checks.push_back({"closed_form_vs_oracle",
                                 worst_gap <= config.oracle_tolerance_db,
                                 "max |gap| " + fmt(worst_gap) + " dB vs tolerance " +
                                     fmt(config.oracle_tolerance_db)});
    }

    // 3. Rate-set dynamic program vs exhaustive search.
    {
        bool ok = true;
        std::string detail = "20 seeded instances, N=10, K<=3";
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int trial = 0; trial < 20 && ok; ++trial) {
            std::vector<double> ngmi_vals(10);
            for (double& v : ngmi_vals) v = unit(rng);
            std::vector<int> bits(10, 6);
            int k = 1 + trial % 3;
            RateAssignment dp = select_code_rates(ngmi_vals, bits, 50e9, k);
            // Exhaustive over candidate subsets of size <= k.
            double best = 0.0;
            std::vector<int> idx(10);
            for (int i = 0; i < 10; ++i) idx[i] = i;
            std::function<void(std::size_t, std::vector<double>&)> rec =
                [&](std::size_t start, std::vector<double>& set) {
                    if (!set.empty()) {
                        double total = 0.0;
                        for (std::size_t i = 0; i < ngmi_vals.size(); ++i) {
                            double r = 0.0;
                            for (double cand : set)
                                if (cand <= ngmi_vals[i]) r = std::max(r, cand);
                            total += 2.0 * 50e9 * bits[i] * r;
                        }
                        best = std::max(best, total);
                    }
                    if (set.size() == static_cast<std::size_t>(k)) return;
                    for (std::size_t j = start; j < ngmi_vals.size(); ++j) {
                        set.push_back(ngmi_vals[j]);
                        rec(j + 1, set);
                        set.pop_back();
                    }
                };
            std::vector<double> set;
            rec(0, set);
            if (std::abs(dp.total_throughput_bps - best) > 1e-3) {
                ok = false;
                detail = "trial " + std::to_string(trial) + ": dp " +
                         fmt(dp.total_throughput_bps) + " vs brute " + fmt(best);
            }
        }
        report.checks.push_back({"rate_dp_vs_exhaustive", ok, detail});
    }

    // 4. GMI asymptotes and quadrature cross-check.
    {
        Constellation qpsk = Constellation::gray_qam(2);
        Constellation qam16 = Constellation::gray_qam(4);
        double hi = gmi(qpsk, db_to_linear(40.0), GmiMethod::gauss_hermite(10)).bits;
        double lo = gmi(qpsk, db_to_linear(-30.0), GmiMethod::gauss_hermite(10)).bits;
        bool ok = std::abs(hi - 2.0) <= 1e-3 && lo <= 0.01;
        std::string detail = "gmi(40dB) = " + fmt(hi) + ", gmi(-30dB) = " + fmt(lo);
        for (double snr_db : {0.0, 7.0, 11.0}) {
            GmiResult gh = gmi(qam16, db_to_linear(snr_db), GmiMethod::gauss_hermite(10));
            GmiResult mc = gmi(qam16, db_to_linear(snr_db),
                               GmiMethod::monte_carlo(200000, config.oracle_seed));
            double gap = std::abs(gh.bits - mc.bits);
            if (gap > 3.0 * mc.std_error) {
                ok = false;
                detail += "; GH vs MC gap " + fmt(gap) + " > 3 SE at " + fmt(snr_db) + " dB";
            }
        }
        report.checks.push_back({"gmi_asymptotes", ok, detail});
    }

    if (write_outputs) {
        nlohmann::json j;
        j["all_passed"] = report.all_passed();
        j["checks"] = nlohmann::json::array();
        for (const auto& c : report.checks)
            j["checks"].push_back({{"name", c.name}, {"pass", c.passed}, {"detail", c.detail}});
        write_file(out_dir(config) / "validate.json", j.dump(2) + "\n");
        write_config_echo(config);
    }
    return report;
}

} // namespace gnlink
