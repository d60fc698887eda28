#include "gnlink/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gnlink/error.hpp"
#include "gnlink/units.hpp"

namespace gnlink {

std::string ModulationChoice::to_string() const {
    switch (kind) {
        case Kind::Qpsk: return "qpsk";
        case Kind::Qam16: return "16qam";
        case Kind::Qam64: return "64qam";
        case Kind::Shaped16: return "shaped16";
        case Kind::Shaped64: return "shaped64";
        case Kind::File: return "file:" + file;
    }
    return "?";
}

ModulationChoice ModulationChoice::parse(const std::string& text, const std::string& key) {
    ModulationChoice m;
    if (text == "qpsk") m.kind = Kind::Qpsk;
    else if (text == "16qam") m.kind = Kind::Qam16;
    else if (text == "64qam") m.kind = Kind::Qam64;
    else if (text == "shaped16") m.kind = Kind::Shaped16;
    else if (text == "shaped64") m.kind = Kind::Shaped64;
    else if (text.rfind("file:", 0) == 0) {
        m.kind = Kind::File;
        m.file = text.substr(5);
        if (m.file.empty()) throw ConfigError(key + ": empty constellation file path");
    } else {
        throw ConfigError(key + ": unknown modulation '" + text + "'");
    }
    return m;
}

namespace {

struct IniEntry {
    std::string value;
    int line;
};

struct IniFile {
    // (section, key) -> entry
    std::map<std::pair<std::string, std::string>, IniEntry> entries;
    std::string origin;

    static IniFile parse(const std::string& text, const std::string& origin) {
        IniFile ini;
        ini.origin = origin;
        std::istringstream in(text);
        std::string line, section;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            // Strip comments: leading or whitespace-preceded # / ;
            std::size_t cut = std::string::npos;
            for (std::size_t i = 0; i < line.size(); ++i) {
                if ((line[i] == '#' || line[i] == ';') &&
                    (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
                    cut = i;
                    break;
                }
            }
            if (cut != std::string::npos) line.erase(cut);
            auto trim = [](std::string s) {
                std::size_t a = s.find_first_not_of(" \t\r");
                std::size_t b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']')
                    throw ConfigError(origin + ":" + std::to_string(lineno) +
                                      ": malformed section header");
                section = trim(line.substr(1, line.size() - 2));
                if (section.empty())
                    throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section");
                continue;
            }
            std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (key.empty())
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
            if (section.empty())
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": key outside a [section]");
            auto inserted = ini.entries.emplace(std::make_pair(section, key),
                                                IniEntry{value, lineno});
            if (!inserted.second)
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key " +
                                  section + "." + key);
        }
        return ini;
    }
};

class Schema {
public:
    explicit Schema(const IniFile& ini) : ini_(ini) {}

    bool has(const std::string& section, const std::string& key) {
        known_.insert(section + "." + key);
        return ini_.entries.count({section, key}) > 0;
    }

    std::string raw(const std::string& section, const std::string& key) {
        known_.insert(section + "." + key);
        return ini_.entries.at({section, key}).value;
    }

    double number(const std::string& section, const std::string& key, double fallback) {
        if (!has(section, key)) return fallback;
        return parse_number(section, key, raw(section, key));
    }

    int integer(const std::string& section, const std::string& key, int fallback) {
        double v = number(section, key, static_cast<double>(fallback));
        double r = std::round(v);
        if (std::abs(v - r) > 1e-9)
            fail(section, key, "expected an integer");
        return static_cast<int>(r);
    }

    std::uint64_t uinteger(const std::string& section, const std::string& key,
                           std::uint64_t fallback) {
        if (!has(section, key)) return fallback;
        const std::string& s = raw(section, key);
        try {
            return std::stoull(s);
        } catch (...) {
            fail(section, key, "expected a non-negative integer");
        }
        return fallback;
    }

    std::string text(const std::string& section, const std::string& key,
                     const std::string& fallback) {
        if (!has(section, key)) return fallback;
        return raw(section, key);
    }

    bool boolean(const std::string& section, const std::string& key, bool fallback) {
        if (!has(section, key)) return fallback;
        std::string v = raw(section, key);
        if (v == "true" || v == "1" || v == "yes") return true;
        if (v == "false" || v == "0" || v == "no") return false;
        fail(section, key, "expected true/false");
        return fallback;
    }

    std::vector<double> numbers(const std::string& section, const std::string& key) {
        std::vector<double> out;
        if (!has(section, key)) return out;
        std::istringstream ss(raw(section, key));
        std::string tok;
        while (ss >> tok) out.push_back(parse_number(section, key, tok));
        return out;
    }

    [[noreturn]] void fail(const std::string& section, const std::string& key,
                           const std::string& why) {
        auto it = ini_.entries.find({section, key});
        std::string where = ini_.origin;
        if (it != ini_.entries.end()) where += ":" + std::to_string(it->second.line);
        throw ConfigError(where + ": " + section + "." + key + ": " + why);
    }

    void reject_unknown() {
        for (const auto& [sk, entry] : ini_.entries) {
            std::string full = sk.first + "." + sk.second;
            if (!known_.count(full))
                throw ConfigError(ini_.origin + ":" + std::to_string(entry.line) +
                                  ": unknown key " + full);
        }
    }

private:
    double parse_number(const std::string& section, const std::string& key,
                        const std::string& s) {
        try {
            std::size_t pos = 0;
            double v = std::stod(s, &pos);
            if (pos != s.size()) fail(section, key, "trailing characters after number");
            return v;
        } catch (const ConfigError&) {
            throw;
        } catch (...) {
            fail(section, key, "expected a number");
        }
    }

    const IniFile& ini_;
    std::set<std::string> known_;
};

void require(bool ok, const std::string& key, const std::string& why) {
    if (!ok) throw ConfigError(key + ": " + why);
}

} // namespace

SimulationConfig parse_config(const std::string& text, const std::string& origin) {
    IniFile ini = IniFile::parse(text, origin);
    Schema s(ini);
    SimulationConfig c;

    c.channels_s = s.integer("plan", "channels_s", c.channels_s);
    c.channels_c = s.integer("plan", "channels_c", c.channels_c);
    c.channels_l = s.integer("plan", "channels_l", c.channels_l);
    c.gap_s_c_nm = s.number("plan", "gap_s_c", c.gap_s_c_nm);
    c.gap_c_l_nm = s.number("plan", "gap_c_l", c.gap_c_l_nm);
    c.symbol_rate_gbd = s.number("plan", "symbol_rate", c.symbol_rate_gbd);
    c.center_wavelength_nm = s.number("plan", "center_wavelength", c.center_wavelength_nm);
    for (const auto& [key, dst] : std::initializer_list<std::pair<const char*, double*>>{
             {"band_s", c.band_s_nm}, {"band_c", c.band_c_nm}, {"band_l", c.band_l_nm}}) {
        if (s.has("plan", key)) {
            auto v = s.numbers("plan", key);
            if (v.size() != 2) s.fail("plan", key, "expected two wavelengths (nm)");
            dst[0] = v[0];
            dst[1] = v[1];
        }
    }

    c.attenuation_db_km = s.number("fiber", "attenuation", c.attenuation_db_km);
    c.attenuation_bar_db_km = s.number("fiber", "attenuation_bar", c.attenuation_bar_db_km);
    c.dispersion_ps_nm_km = s.number("fiber", "dispersion", c.dispersion_ps_nm_km);
    c.dispersion_slope_ps_nm2_km = s.number("fiber", "dispersion_slope",
                                            c.dispersion_slope_ps_nm2_km);
    c.gamma_w_km = s.number("fiber", "gamma", c.gamma_w_km);
    c.raman_slope_w_km_thz = s.number("fiber", "raman_slope", c.raman_slope_w_km_thz);
    c.span_length_km = s.number("fiber", "span_length", c.span_length_km);
    c.ref_wavelength_nm = s.number("fiber", "ref_wavelength", c.ref_wavelength_nm);
    c.rk4_step_m = s.number("fiber", "rk4_step", c.rk4_step_m);
    c.attenuation_table_db_km = s.numbers("fiber", "attenuation_table");

    c.nf_s_db = s.number("amplifier", "nf_s", c.nf_s_db);
    c.nf_c_db = s.number("amplifier", "nf_c", c.nf_c_db);
    c.nf_l_db = s.number("amplifier", "nf_l", c.nf_l_db);
    c.equalization = s.text("amplifier", "equalization", c.equalization);
    c.compensation = s.number("amplifier", "compensation", c.compensation);
    c.reset_period = s.integer("amplifier", "reset_period", c.reset_period);
    c.compensation_reference =
        s.text("amplifier", "compensation_reference", c.compensation_reference);
    c.ase_gain_floor = s.text("amplifier", "ase_gain_floor", c.ase_gain_floor);
    c.ase_polarizations = s.integer("amplifier", "ase_polarizations", c.ase_polarizations);

    c.spans = s.integer("link", "spans", c.spans);

    c.power_mode = s.text("power", "mode", c.power_mode);
    c.flat_dbm = s.number("power", "flat_dbm", c.flat_dbm);
    c.power_file = s.text("power", "file", c.power_file);

    if (s.has("modulation", "s"))
        c.mod_s = ModulationChoice::parse(s.raw("modulation", "s"), "modulation.s");
    if (s.has("modulation", "c"))
        c.mod_c = ModulationChoice::parse(s.raw("modulation", "c"), "modulation.c");
    if (s.has("modulation", "l"))
        c.mod_l = ModulationChoice::parse(s.raw("modulation", "l"), "modulation.l");
    c.shaping_snr_16_db = s.number("modulation", "shaping_snr_16", c.shaping_snr_16_db);
    c.shaping_snr_64_db = s.number("modulation", "shaping_snr_64", c.shaping_snr_64_db);
    c.shaping_iters = s.integer("modulation", "shaping_iters", c.shaping_iters);
    c.shaping_seed = s.uinteger("modulation", "shaping_seed", c.shaping_seed);
    c.format_correction = s.number("modulation", "format_correction", c.format_correction);

    c.epsilon = s.text("nli", "epsilon", c.epsilon);

    c.swarm = s.integer("optimizer", "swarm", c.swarm);
    c.iterations = s.integer("optimizer", "iterations", c.iterations);
    c.inertia = s.number("optimizer", "inertia", c.inertia);
    c.cognitive = s.number("optimizer", "cognitive", c.cognitive);
    c.social = s.number("optimizer", "social", c.social);
    c.optimizer_seed = s.uinteger("optimizer", "seed", c.optimizer_seed);
    c.offset_min = s.number("optimizer", "offset_min", c.offset_min);
    c.offset_max = s.number("optimizer", "offset_max", c.offset_max);
    c.tilt_min = s.number("optimizer", "tilt_min", c.tilt_min);
    c.tilt_max = s.number("optimizer", "tilt_max", c.tilt_max);
    c.channel_min = s.number("optimizer", "channel_min", c.channel_min);
    c.channel_max = s.number("optimizer", "channel_max", c.channel_max);
    c.gradient_step_db = s.number("optimizer", "gradient_step", c.gradient_step_db);
    c.gradient_tol_tbps = s.number("optimizer", "gradient_tol", c.gradient_tol_tbps);
    c.gradient_max_iters = s.integer("optimizer", "gradient_max_iters", c.gradient_max_iters);

    c.k_rates = s.integer("rates", "k", c.k_rates);
    if (s.has("rates", "sweep")) {
        c.sweep.clear();
        for (double v : s.numbers("rates", "sweep")) {
            if (v < 1 || std::abs(v - std::round(v)) > 1e-9)
                s.fail("rates", "sweep", "expected positive integers");
            c.sweep.push_back(static_cast<int>(std::round(v)));
        }
    }

    c.oracle_n_mc = static_cast<std::size_t>(
        s.uinteger("oracle", "n_mc", static_cast<std::uint64_t>(c.oracle_n_mc)));
    c.oracle_seed = s.uinteger("oracle", "seed", c.oracle_seed);
    c.oracle_tolerance_db = s.number("oracle", "tolerance", c.oracle_tolerance_db);

    c.output_directory = s.text("output", "directory", c.output_directory);
    c.write_profile = s.boolean("output", "write_profile", c.write_profile);
    c.render_plots = s.boolean("output", "render_plots", c.render_plots);

    s.reject_unknown();

    // Validation: first violated constraint names the key.
    require(c.channels_s >= 0 && c.channels_c >= 0 && c.channels_l >= 0 &&
                c.channels_s + c.channels_c + c.channels_l > 0,
            "plan.channels_s", "band channel counts must be >= 0 and sum > 0");
    require(c.symbol_rate_gbd > 0, "plan.symbol_rate", "must be > 0");
    require(c.center_wavelength_nm > 0, "plan.center_wavelength", "must be > 0");
    require(c.gap_s_c_nm >= 0, "plan.gap_s_c", "must be >= 0");
    require(c.gap_c_l_nm >= 0, "plan.gap_c_l", "must be >= 0");
    require(c.attenuation_db_km > 0, "fiber.attenuation", "must be > 0");
    require(c.gamma_w_km > 0, "fiber.gamma", "must be > 0");
    require(c.raman_slope_w_km_thz >= 0, "fiber.raman_slope", "must be >= 0");
    require(c.span_length_km > 0, "fiber.span_length", "must be > 0");
    require(c.ref_wavelength_nm > 0, "fiber.ref_wavelength", "must be > 0");
    require(c.rk4_step_m > 0, "fiber.rk4_step", "must be > 0");
    require(c.nf_s_db > 0, "amplifier.nf_s", "must be > 0 dB");
    require(c.nf_c_db > 0, "amplifier.nf_c", "must be > 0 dB");
    require(c.nf_l_db > 0, "amplifier.nf_l", "must be > 0 dB");
    require(c.equalization == "ideal" || c.equalization == "partial", "amplifier.equalization",
            "must be ideal or partial");
    require(c.compensation >= 0.0 && c.compensation <= 1.0, "amplifier.compensation",
            "must be in [0, 1]");
    require(c.reset_period >= 1, "amplifier.reset_period", "must be >= 1");
    require(c.compensation_reference == "span" || c.compensation_reference == "cumulative",
            "amplifier.compensation_reference", "must be span or cumulative");
    require(c.ase_gain_floor == "loss" || c.ase_gain_floor == "none", "amplifier.ase_gain_floor",
            "must be loss or none");
    require(c.ase_polarizations == 1 || c.ase_polarizations == 2, "amplifier.ase_polarizations",
            "must be 1 or 2");
    require(c.spans >= 1, "link.spans", "must be >= 1");
    require(c.power_mode == "flat" || c.power_mode == "file", "power.mode",
            "must be flat or file");
    require(c.shaping_iters >= 0, "modulation.shaping_iters", "must be >= 0");
    require(c.epsilon == "auto" || [&] {
        try {
            std::size_t pos = 0;
            double v = std::stod(c.epsilon, &pos);
            return pos == c.epsilon.size() && v >= 0.0;
        } catch (...) {
            return false;
        }
    }(), "nli.epsilon", "must be auto or a number >= 0");
    require(c.swarm >= 1, "optimizer.swarm", "must be >= 1");
    require(c.iterations >= 0, "optimizer.iterations", "must be >= 0");
    require(c.inertia > 0 && c.inertia < 1, "optimizer.inertia", "must be in (0, 1)");
    require(c.offset_max >= c.offset_min, "optimizer.offset_max", "bounds must be ordered");
    require(c.tilt_max >= c.tilt_min, "optimizer.tilt_max", "bounds must be ordered");
    require(c.channel_max >= c.channel_min, "optimizer.channel_max", "bounds must be ordered");
    require(c.gradient_step_db > 0, "optimizer.gradient_step", "must be > 0");
    require(c.gradient_max_iters >= 0, "optimizer.gradient_max_iters", "must be >= 0");
    require(c.k_rates >= 1, "rates.k", "must be >= 1");
    require(!c.sweep.empty(), "rates.sweep", "must not be empty");
    require(c.oracle_n_mc >= 1000, "oracle.n_mc", "must be >= 1000");
    require(c.oracle_tolerance_db > 0, "oracle.tolerance", "must be > 0");
    for (double a : c.attenuation_table_db_km)
        require(a > 0, "fiber.attenuation_table", "entries must be > 0");

    return c;
}

SimulationConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

PlanRequest SimulationConfig::plan_request() const {
    PlanRequest r;
    r.channels_per_band = {channels_s, channels_c, channels_l};
    r.gap_s_c_m = gap_s_c_nm * 1e-9;
    r.gap_c_l_m = gap_c_l_nm * 1e-9;
    r.symbol_rate_hz = symbol_rate_gbd * 1e9;
    r.center_wavelength_m = center_wavelength_nm * 1e-9;
    r.edges.wavelength_m[static_cast<int>(Band::S)] = {band_s_nm[0] * 1e-9, band_s_nm[1] * 1e-9};
    r.edges.wavelength_m[static_cast<int>(Band::C)] = {band_c_nm[0] * 1e-9, band_c_nm[1] * 1e-9};
    r.edges.wavelength_m[static_cast<int>(Band::L)] = {band_l_nm[0] * 1e-9, band_l_nm[1] * 1e-9};
    return r;
}

LinkSpec SimulationConfig::build_link(std::size_t n_channels) const {
    LinkSpec link;
    link.n_spans = spans;
    link.fiber.attenuation_np_m = db_per_km_to_np_per_m(attenuation_db_km);
    double abar = attenuation_bar_db_km > 0 ? attenuation_bar_db_km : attenuation_db_km;
    link.fiber.attenuation_bar_np_m = db_per_km_to_np_per_m(abar);
    link.fiber.dispersion_d = dispersion_to_si(dispersion_ps_nm_km);
    link.fiber.dispersion_slope_s = dispersion_slope_to_si(dispersion_slope_ps_nm2_km);
    link.fiber.gamma = gamma_to_si(gamma_w_km);
    link.fiber.raman_slope_cr = raman_slope_to_si(raman_slope_w_km_thz);
    link.fiber.span_length_m = span_length_km * 1e3;
    link.fiber.ref_wavelength_m = ref_wavelength_nm * 1e-9;
    link.fiber.rk4_step_m = rk4_step_m;
    if (!attenuation_table_db_km.empty()) {
        link.fiber.per_channel_attenuation_np_m.reserve(attenuation_table_db_km.size());
        for (double a : attenuation_table_db_km)
            link.fiber.per_channel_attenuation_np_m.push_back(db_per_km_to_np_per_m(a));
    }
    link.amplifier.noise_figure_db = {nf_s_db, nf_c_db, nf_l_db};
    link.amplifier.equalization =
        equalization == "ideal" ? EqualizationMode::Ideal : EqualizationMode::Partial;
    link.amplifier.compensation_fraction = compensation;
    link.amplifier.reset_period = reset_period;
    link.amplifier.compensation_reference = compensation_reference == "span"
                                                ? CompensationReference::Span
                                                : CompensationReference::Cumulative;
    link.amplifier.ase_gain_floor =
        ase_gain_floor == "loss" ? AseGainFloor::SpanLoss : AseGainFloor::None;
    link.amplifier.ase_polarizations = ase_polarizations;
    link.validate(n_channels);
    return link;
}

double SimulationConfig::epsilon_override() const {
    if (epsilon == "auto") return -1.0;
    return std::stod(epsilon);
}

void SimulationConfig::override_seeds(std::uint64_t seed) {
    optimizer_seed = seed;
    oracle_seed = seed;
    shaping_seed = seed;
}

std::string SimulationConfig::echo() const {
    std::ostringstream o;
    o.precision(17);
    o << "[plan]\n";
    o << "channels_s = " << channels_s << "\n";
    o << "channels_c = " << channels_c << "\n";
    o << "channels_l = " << channels_l << "\n";
    o << "gap_s_c = " << gap_s_c_nm << "\n";
    o << "gap_c_l = " << gap_c_l_nm << "\n";
    o << "symbol_rate = " << symbol_rate_gbd << "\n";
    o << "center_wavelength = " << center_wavelength_nm << "\n";
    o << "band_s = " << band_s_nm[0] << " " << band_s_nm[1] << "\n";
    o << "band_c = " << band_c_nm[0] << " " << band_c_nm[1] << "\n";
    o << "band_l = " << band_l_nm[0] << " " << band_l_nm[1] << "\n";
    o << "\n[fiber]\n";
    o << "attenuation = " << attenuation_db_km << "\n";
    o << "attenuation_bar = "
      << (attenuation_bar_db_km > 0 ? attenuation_bar_db_km : attenuation_db_km) << "\n";
    o << "dispersion = " << dispersion_ps_nm_km << "\n";
    o << "dispersion_slope = " << dispersion_slope_ps_nm2_km << "\n";
    o << "gamma = " << gamma_w_km << "\n";
    o << "raman_slope = " << raman_slope_w_km_thz << "\n";
    o << "span_length = " << span_length_km << "\n";
    o << "ref_wavelength = " << ref_wavelength_nm << "\n";
    o << "rk4_step = " << rk4_step_m << "\n";
    if (!attenuation_table_db_km.empty()) {
        o << "attenuation_table =";
        for (double a : attenuation_table_db_km) o << " " << a;
        o << "\n";
    }
    o << "\n[amplifier]\n";
    o << "nf_s = " << nf_s_db << "\n";
    o << "nf_c = " << nf_c_db << "\n";
    o << "nf_l = " << nf_l_db << "\n";
    o << "equalization = " << equalization << "\n";
    o << "compensation = " << compensation << "\n";
    o << "reset_period = " << reset_period << "\n";
    o << "compensation_reference = " << compensation_reference << "\n";
    o << "ase_gain_floor = " << ase_gain_floor << "\n";
    o << "ase_polarizations = " << ase_polarizations << "\n";
    o << "\n[link]\n";
    o << "spans = " << spans << "\n";
    o << "\n[power]\n";
    o << "mode = " << power_mode << "\n";
    o << "flat_dbm = " << flat_dbm << "\n";
    if (!power_file.empty()) o << "file = " << power_file << "\n";
    o << "\n[modulation]\n";
    o << "s = " << mod_s.to_string() << "\n";
    o << "c = " << mod_c.to_string() << "\n";
    o << "l = " << mod_l.to_string() << "\n";
    o << "shaping_snr_16 = " << shaping_snr_16_db << "\n";
    o << "shaping_snr_64 = " << shaping_snr_64_db << "\n";
    o << "shaping_iters = " << shaping_iters << "\n";
    o << "shaping_seed = " << shaping_seed << "\n";
    o << "format_correction = " << format_correction << "\n";
    o << "\n[nli]\n";
    o << "epsilon = " << epsilon << "\n";
    o << "\n[optimizer]\n";
    o << "swarm = " << swarm << "\n";
    o << "iterations = " << iterations << "\n";
    o << "inertia = " << inertia << "\n";
    o << "cognitive = " << cognitive << "\n";
    o << "social = " << social << "\n";
    o << "seed = " << optimizer_seed << "\n";
    o << "offset_min = " << offset_min << "\n";
    o << "offset_max = " << offset_max << "\n";
    o << "tilt_min = " << tilt_min << "\n";
    o << "tilt_max = " << tilt_max << "\n";
    o << "channel_min = " << channel_min << "\n";
    o << "channel_max = " << channel_max << "\n";
    o << "gradient_step = " << gradient_step_db << "\n";
    o << "gradient_tol = " << gradient_tol_tbps << "\n";
    o << "gradient_max_iters = " << gradient_max_iters << "\n";
    o << "\n[rates]\n";
    o << "k = " << k_rates << "\n";
    o << "sweep =";
    for (int k : sweep) o << " " << k;
    o << "\n";
    o << "\n[oracle]\n";
    o << "n_mc = " << oracle_n_mc << "\n";
    o << "seed = " << oracle_seed << "\n";
    o << "tolerance = " << oracle_tolerance_db << "\n";
    o << "\n[output]\n";
    o << "directory = " << output_directory << "\n";
    o << "write_profile = " << (write_profile ? "true" : "false") << "\n";
    o << "render_plots = " << (render_plots ? "true" : "false") << "\n";
    return o.str();
}

} // namespace gnlink
