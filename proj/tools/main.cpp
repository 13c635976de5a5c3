// Command-line front end for the uhlmann library.  Reads a job from flags
// or a JSON file, runs it through the C API, and emits line-delimited JSON
// records or CSV.  Exit codes: 0 success, 1 validation failure, 2 numerical
// failure (undefined phase, degenerate configuration, no convergence).

#include <uhlmann/uhlmann.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

constexpr double kDegPerRad = 57.29577951308232;

using Triple = std::array<double, 3>;

std::string fmt(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_num(double v) { return std::isfinite(v) ? fmt(v) : "null"; }

class JsonRecord {
  public:
    void num(const std::string &k, double v) { field(k, json_num(v)); }
    void integer(const std::string &k, long long v) {
        field(k, std::to_string(v));
    }
    void boolean(const std::string &k, bool v) { field(k, v ? "true" : "false"); }
    void null(const std::string &k) { field(k, "null"); }
    void str(const std::string &k, const std::string &v) {
        field(k, "\"" + v + "\"");
    }
    void arr(const std::string &k, const double *v, int n) {
        std::string s = "[";
        for (int i = 0; i < n; ++i) {
            if (i)
                s += ',';
            s += json_num(v[i]);
        }
        field(k, s + "]");
    }
    std::string finish() const { return "{" + body_ + "}"; }

  private:
    void field(const std::string &k, const std::string &v) {
        if (!body_.empty())
            body_ += ',';
        body_ += "\"" + k + "\":" + v;
    }
    std::string body_;
};

int fail_validation(const std::string &msg) {
    std::cerr << "error: " << msg << "\n";
    return 1;
}

int fail_numerical(const std::string &msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int fail_status(uhl_status s, const std::string &context) {
    const std::string msg = context + ": " + uhl_status_string(s);
    if (s == UHL_ERR_INVALID_ARGUMENT || s == UHL_ERR_DOMAIN)
        return fail_validation(msg);
    return fail_numerical(msg);
}

struct Job {
    std::string mode;
    std::vector<Triple> points;
    int subdivisions = -1; // -1: apply the mode default
    std::string radius_grid;
    double tolerance = 1e-8;
    unsigned long long seed = 0;
    bool have_seed = false;
    bool degrees = false;
    std::string format = "json-lines";

    double angle(double rad) const { return degrees ? rad * kDegPerRad : rad; }
    bool csv() const { return format == "csv"; }
};

// Uniform draws built from the raw 64-bit stream so that every platform
// produces the same sequence for the same seed.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(unsigned long long s) : eng(s) {}
    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double symmetric() { return 2.0 * uniform() - 1.0; }
    Triple ball(double radius) {
        for (;;) {
            const Triple p{symmetric(), symmetric(), symmetric()};
            if (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] < 1.0)
                return {p[0] * radius, p[1] * radius, p[2] * radius};
        }
    }
};

double norm3(const Triple &p) {
    return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
}

bool unit3(const Triple &p) { return std::abs(norm3(p) - 1.0) <= 1e-9; }

double quat_maxdiff(const double a[4], const double b[4]) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

struct PathGuard {
    uhl_path *p = uhl_path_create();
    ~PathGuard() { uhl_path_destroy(p); }
    PathGuard() = default;
    PathGuard(const PathGuard &) = delete;
    PathGuard &operator=(const PathGuard &) = delete;
};

bool parse_triple(const std::string &s, Triple &out) {
    std::istringstream in(s);
    std::string tok;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(in, tok, ','))
            return false;
        try {
            std::size_t used = 0;
            out[i] = std::stod(tok, &used);
            while (used < tok.size() && std::isspace(tok[used]))
                ++used;
            if (used != tok.size())
                return false;
        } catch (const std::exception &) {
            return false;
        }
    }
    return !std::getline(in, tok, ',');
}

bool parse_grid(const std::string &s, std::vector<double> &out) {
    double a = 0.0, b = 0.0, step = 0.0;
    char colon1 = 0, colon2 = 0;
    std::istringstream in(s);
    if (!(in >> a >> colon1 >> b >> colon2 >> step) || colon1 != ':' ||
        colon2 != ':' || !(in >> std::ws).eof())
        return false;
    if (!(step > 0.0) || !(a > 0.0) || !(b >= a) || b > 1.0)
        return false;
    out.clear();
    for (double r = a; r <= b + 1e-12; r += step)
        out.push_back(std::min(r, 1.0));
    return !out.empty();
}

int thread_count() {
    const char *env = std::getenv("UHLMANN_THREADS");
    if (env == nullptr)
        return 1;
    const int n = std::atoi(env);
    return n > 0 ? n : 1;
}

// --- mode runners --------------------------------------------------------

void emit_csv_header(const Job &job, const std::string &header) {
    if (job.csv())
        std::cout << header << "\n";
}

int run_triangle_record(const Job &job, const Triple &u, const Triple &v,
                        const Triple &w, long long index, bool sweep_mode,
                        std::string &line, uhl_status &status) {
    if (!sweep_mode && unit3(u) && unit3(v) && unit3(w)) {
        double phase = 0.0, omega = 0.0;
        status = uhl_solid_angle_phase(u.data(), v.data(), w.data(), &phase,
                                       &omega);
        if (status != UHL_OK)
            return 1;
        if (job.csv()) {
            line = fmt(job.angle(phase)) + "," + fmt(job.angle(omega)) + ",1";
        } else {
            JsonRecord r;
            r.str("mode", job.mode);
            r.boolean("pure", true);
            r.num("phase", job.angle(phase));
            r.num("omega", job.angle(omega));
            r.num("visibility", 1.0);
            line = r.finish();
        }
        return 0;
    }

    uhl_triangle_result t;
    t.phase = std::nan("");
    status = uhl_triangle(u.data(), v.data(), w.data(), &t);
    if (status != UHL_OK && status != UHL_ERR_PHASE_UNDEFINED)
        return 1;
    if (job.csv()) {
        line = (sweep_mode ? std::to_string(index) + "," : std::string()) +
               fmt(job.angle(t.phase)) + "," + fmt(t.visibility) + "," +
               fmt(job.angle(t.delta)) + "," + fmt(t.axis[0]) + "," +
               fmt(t.axis[1]) + "," + fmt(t.axis[2]) + "," + fmt(t.volume) +
               "," + fmt(t.mu);
    } else {
        JsonRecord r;
        r.str("mode", job.mode);
        if (sweep_mode)
            r.integer("index", index);
        if (status == UHL_ERR_PHASE_UNDEFINED)
            r.null("phase");
        else
            r.num("phase", job.angle(t.phase));
        r.num("visibility", t.visibility);
        r.num("delta", job.angle(t.delta));
        r.arr("axis", t.axis, 3);
        r.arr("rotation", t.rotation, 4);
        r.arr("p", t.p, 3);
        r.arr("q", t.q, 3);
        r.num("volume", t.volume);
        r.num("mu", t.mu);
        line = r.finish();
    }
    return 0;
}

int run_triangle(const Job &job) {
    if (job.points.size() != 3)
        return fail_validation("triangle mode needs exactly 3 points");
    const bool pure =
        unit3(job.points[0]) && unit3(job.points[1]) && unit3(job.points[2]);
    emit_csv_header(job, pure ? "phase,omega,visibility"
                              : "phase,visibility,delta,axis_x,axis_y,axis_z,"
                                "volume,mu");
    std::string line;
    uhl_status status = UHL_OK;
    if (run_triangle_record(job, job.points[0], job.points[1], job.points[2],
                            0, false, line, status) != 0)
        return fail_status(status, "triangle");
    std::cout << line << "\n";
    if (status == UHL_ERR_PHASE_UNDEFINED)
        return fail_numerical("triangle: phase undefined (visibility below floor)");
    return 0;
}

int run_polygon(const Job &job) {
    if (job.points.size() < 2)
        return fail_validation("polygon mode needs at least 2 points");
    PathGuard path;
    if (path.p == nullptr)
        return fail_numerical("polygon: allocation failure");
    for (std::size_t i = 0; i < job.points.size(); ++i) {
        const uhl_status s = uhl_path_push(path.p, job.points[i].data());
        if (s != UHL_OK)
            return fail_status(s, "polygon: points[" + std::to_string(i) + "]");
    }
    uhl_holonomy_result h;
    h.phase = std::nan("");
    const uhl_status s = uhl_path_holonomy(path.p, 0, &h);
    if (s != UHL_OK && s != UHL_ERR_PHASE_UNDEFINED)
        return fail_status(s, "polygon");
    emit_csv_header(job, "phase,visibility,angle,axis_x,axis_y,axis_z");
    if (job.csv()) {
        std::cout << fmt(job.angle(h.phase)) << "," << fmt(h.visibility) << ","
                  << fmt(job.angle(h.angle)) << "," << fmt(h.axis[0]) << ","
                  << fmt(h.axis[1]) << "," << fmt(h.axis[2]) << "\n";
    } else {
        JsonRecord r;
        r.str("mode", job.mode);
        r.integer("vertices", static_cast<long long>(job.points.size()));
        if (s == UHL_ERR_PHASE_UNDEFINED)
            r.null("phase");
        else
            r.num("phase", job.angle(h.phase));
        r.num("visibility", h.visibility);
        r.num("angle", job.angle(h.angle));
        r.arr("axis", h.axis, 3);
        r.arr("rotation", h.rotation, 4);
        std::cout << r.finish() << "\n";
    }
    if (s == UHL_ERR_PHASE_UNDEFINED)
        return fail_numerical("polygon: phase undefined (visibility below floor)");
    return 0;
}

int run_geodesic_refine(const Job &job) {
    Triple u{}, v{};
    if (job.points.size() == 2) {
        u = job.points[0];
        v = job.points[1];
    } else if (job.points.empty() && job.have_seed) {
        Rng rng(job.seed);
        u = rng.ball(0.9);
        v = rng.ball(0.9);
    } else {
        return fail_validation(
            "geodesic-refine mode needs exactly 2 points or --seed");
    }
    const int top = job.subdivisions > 0 ? job.subdivisions : 64;
    std::vector<int> ns;
    for (int n = 1; n < top; n *= 2)
        ns.push_back(n);
    ns.push_back(top);
    emit_csv_header(job, "n,deviation");
    double last_dev = 0.0;
    for (int n : ns) {
        double quat[4];
        double dev = 0.0;
        const uhl_status s =
            uhl_refined_geodesic_holonomy(u.data(), v.data(), n, quat, &dev);
        if (s != UHL_OK)
            return fail_status(s, "geodesic-refine");
        last_dev = dev;
        if (job.csv()) {
            std::cout << n << "," << fmt(dev) << "\n";
        } else {
            JsonRecord r;
            r.str("mode", job.mode);
            r.integer("n", n);
            r.num("deviation", dev);
            r.arr("rotation", quat, 4);
            r.arr("u", u.data(), 3);
            r.arr("v", v.data(), 3);
            std::cout << r.finish() << "\n";
        }
    }
    if (last_dev > job.tolerance)
        return fail_numerical("geodesic-refine: deviation " + fmt(last_dev) +
                              " above tolerance " + fmt(job.tolerance));
    return 0;
}

int run_pure_limit(const Job &job) {
    if (job.points.size() != 3)
        return fail_validation("pure-limit mode needs exactly 3 points");
    double phase = 0.0, omega = 0.0;
    const uhl_status s =
        uhl_solid_angle_phase(job.points[0].data(), job.points[1].data(),
                              job.points[2].data(), &phase, &omega);
    if (s != UHL_OK)
        return fail_status(s, "pure-limit (unit vectors required)");
    emit_csv_header(job, "phase,omega,visibility");
    if (job.csv()) {
        std::cout << fmt(job.angle(phase)) << "," << fmt(job.angle(omega))
                  << ",1\n";
    } else {
        JsonRecord r;
        r.str("mode", job.mode);
        r.num("phase", job.angle(phase));
        r.num("omega", job.angle(omega));
        r.num("visibility", 1.0);
        std::cout << r.finish() << "\n";
    }
    return 0;
}

int run_compare_slater(const Job &job) {
    if (job.points.size() != 3)
        return fail_validation("compare-slater mode needs exactly 3 points");
    std::vector<double> grid;
    const std::string spec =
        job.radius_grid.empty() ? "0.1:0.9:0.1" : job.radius_grid;
    if (!parse_grid(spec, grid))
        return fail_validation("radius grid must be a:b:step with 0 < a <= b <= 1 "
                               "and step > 0, got '" + spec + "'");
    emit_csv_header(
        job, "r,mu,tan_uhlmann,tan_slater,tan_interferometric,ratio");
    for (double r : grid) {
        uhl_slater_comparison c;
        const uhl_status s =
            uhl_compare_slater(job.points[0].data(), job.points[1].data(),
                               job.points[2].data(), r, &c);
        if (s != UHL_OK && s != UHL_ERR_DEGENERATE)
            return fail_status(s, "compare-slater at r=" + fmt(r));
        if (job.csv()) {
            std::cout << fmt(c.r) << "," << fmt(c.mu) << ","
                      << fmt(c.tan_uhlmann) << "," << fmt(c.tan_slater) << ","
                      << fmt(c.tan_interferometric) << "," << fmt(c.ratio)
                      << "\n";
        } else {
            JsonRecord rec;
            rec.str("mode", job.mode);
            rec.num("r", c.r);
            rec.num("mu", c.mu);
            rec.num("omega", job.angle(c.omega));
            rec.num("tan_uhlmann", c.tan_uhlmann);
            rec.num("tan_slater", c.tan_slater);
            rec.num("tan_interferometric", c.tan_interferometric);
            rec.num("ratio", c.ratio);
            rec.boolean("slater_defined", s == UHL_OK);
            std::cout << rec.finish() << "\n";
        }
    }
    return 0;
}

int run_hopf_check(const Job &job) {
    Triple u{}, v{}, w{};
    if (job.points.size() == 3) {
        u = job.points[0];
        v = job.points[1];
        w = job.points[2];
    } else if (job.points.empty() && job.have_seed) {
        Rng rng(job.seed);
        u = rng.ball(0.9);
        v = rng.ball(0.9);
        w = rng.ball(0.9);
    } else {
        return fail_validation("hopf-check mode needs exactly 3 points or --seed");
    }
    uhl_triangle_result t;
    uhl_status s = uhl_triangle(u.data(), v.data(), w.data(), &t);
    if (s != UHL_OK && s != UHL_ERR_PHASE_UNDEFINED)
        return fail_status(s, "hopf-check");

    PathGuard path;
    if (path.p == nullptr)
        return fail_numerical("hopf-check: allocation failure");
    for (const Triple *p : {&u, &v, &w}) {
        s = uhl_path_push(path.p, p->data());
        if (s != UHL_OK)
            return fail_status(s, "hopf-check");
    }
    double panch[4];
    s = uhl_pancharatnam_holonomy(path.p, panch);
    if (s != UHL_OK)
        return fail_status(s, "hopf-check: pancharatnam");

    const int n_steps = job.subdivisions > 0 ? job.subdivisions : 1024;
    double wilson[4];
    const uhl_status ws = uhl_wilson_loop(path.p, n_steps, wilson);
    if (ws != UHL_OK && ws != UHL_ERR_NOT_CONVERGED)
        return fail_status(ws, "hopf-check: wilson loop");

    const double dev_p = quat_maxdiff(t.rotation, panch);
    const double dev_w = quat_maxdiff(t.rotation, wilson);
    emit_csv_header(job, "n_steps,pancharatnam_deviation,wilson_deviation");
    if (job.csv()) {
        std::cout << n_steps << "," << fmt(dev_p) << "," << fmt(dev_w) << "\n";
    } else {
        JsonRecord r;
        r.str("mode", job.mode);
        r.integer("n_steps", n_steps);
        r.arr("u", u.data(), 3);
        r.arr("v", v.data(), 3);
        r.arr("w", w.data(), 3);
        r.arr("rotation", t.rotation, 4);
        r.arr("pancharatnam", panch, 4);
        r.arr("wilson", wilson, 4);
        r.num("pancharatnam_deviation", dev_p);
        r.num("wilson_deviation", dev_w);
        r.boolean("wilson_converged", ws == UHL_OK);
        std::cout << r.finish() << "\n";
    }
    if (ws == UHL_ERR_NOT_CONVERGED)
        return fail_numerical("hopf-check: wilson loop discretization too coarse");
    if (dev_p > job.tolerance)
        return fail_numerical("hopf-check: pancharatnam deviation " + fmt(dev_p) +
                              " above tolerance " + fmt(job.tolerance));
    return 0;
}

int run_sweep(const Job &job) {
    if (job.points.empty() || job.points.size() % 3 != 0)
        return fail_validation(
            "sweep mode needs a multiple of 3 points (consecutive triangles)");
    for (std::size_t i = 0; i < job.points.size(); ++i) {
        if (norm3(job.points[i]) > 1.0 - 1e-9)
            return fail_validation("points[" + std::to_string(i) +
                                   "] must be strictly interior for sweep");
    }
    const std::size_t count = job.points.size() / 3;
    std::vector<std::string> lines(count);
    std::vector<uhl_status> statuses(count, UHL_OK);

    const int threads =
        std::min<int>(thread_count(), static_cast<int>(count));
    auto worker = [&](std::size_t start, std::size_t stride) {
        for (std::size_t i = start; i < count; i += stride)
            run_triangle_record(job, job.points[3 * i], job.points[3 * i + 1],
                                job.points[3 * i + 2],
                                static_cast<long long>(i), true, lines[i],
                                statuses[i]);
    };
    if (threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker, static_cast<std::size_t>(t),
                              static_cast<std::size_t>(threads));
        for (std::thread &t : pool)
            t.join();
    }

    emit_csv_header(
        job, "index,phase,visibility,delta,axis_x,axis_y,axis_z,volume,mu");
    int code = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (statuses[i] != UHL_OK && statuses[i] != UHL_ERR_PHASE_UNDEFINED)
            return fail_status(statuses[i],
                               "sweep: triangle " + std::to_string(i));
        std::cout << lines[i] << "\n";
        if (statuses[i] == UHL_ERR_PHASE_UNDEFINED)
            code = 2;
    }
    if (code != 0)
        std::cerr << "error: sweep: at least one triangle has an undefined "
                     "phase\n";
    return code;
}

// --- job assembly --------------------------------------------------------

int load_json_job(const std::string &path, Job &job, bool mode_set,
                  bool subdiv_set, bool grid_set, bool tol_set, bool seed_set,
                  bool degrees_set, bool format_set, bool points_set) {
    std::ifstream in(path);
    if (!in)
        return fail_validation("cannot open input file '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        return fail_validation("input parse: " + std::string(e.what()));
    }
    if (!j.is_object())
        return fail_validation("input: top level must be an object");
    try {
        if (!mode_set && j.contains("mode"))
            job.mode = j.at("mode").get<std::string>();
        if (!points_set && j.contains("points")) {
            const nlohmann::json &pts = j.at("points");
            if (!pts.is_array())
                return fail_validation("input: points must be an array");
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const nlohmann::json &p = pts[i];
                if (!p.is_array() || p.size() != 3 || !p[0].is_number() ||
                    !p[1].is_number() || !p[2].is_number())
                    return fail_validation("input: points[" +
                                           std::to_string(i) +
                                           "] must be 3 numbers");
                job.points.push_back(
                    {p[0].get<double>(), p[1].get<double>(),
                     p[2].get<double>()});
            }
        }
        if (!subdiv_set && j.contains("subdivisions"))
            job.subdivisions = j.at("subdivisions").get<int>();
        if (!grid_set && j.contains("radius_grid"))
            job.radius_grid = j.at("radius_grid").get<std::string>();
        if (!tol_set && j.contains("tolerance"))
            job.tolerance = j.at("tolerance").get<double>();
        if (!seed_set && j.contains("seed")) {
            job.seed = j.at("seed").get<unsigned long long>();
            job.have_seed = true;
        }
        if (!degrees_set && j.contains("degrees"))
            job.degrees = j.at("degrees").get<bool>();
        if (!format_set && j.contains("format"))
            job.format = j.at("format").get<std::string>();
    } catch (const nlohmann::json::exception &e) {
        return fail_validation("input: " + std::string(e.what()));
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Uhlmann geometric phases of one-qubit mixed states"};
    app.get_formatter()->column_width(34);

    std::string mode, input, format, radius_grid;
    std::string u_str, v_str, w_str;
    int subdivisions = 0;
    double tolerance = 0.0;
    long long seed = 0;
    bool degrees = false;

    app.add_option("--mode", mode,
                   "triangle|polygon|geodesic-refine|pure-limit|"
                   "compare-slater|hopf-check|sweep");
    app.add_option("--input", input, "JSON job file");
    app.add_option("--u", u_str, "first point as x,y,z");
    app.add_option("--v", v_str, "second point as x,y,z");
    app.add_option("--w", w_str, "third point as x,y,z");
    app.add_option("--format", format, "csv or json-lines (default)");
    app.add_option("--subdivisions", subdivisions,
                   "refinement steps (geodesic-refine, hopf-check)");
    app.add_option("--radius-grid", radius_grid,
                   "a:b:step sweep for compare-slater");
    app.add_option("--tolerance", tolerance,
                   "acceptance threshold for self-checking modes "
                   "(default 1e-8, env UHLMANN_TOLERANCE)");
    app.add_option("--seed", seed, "generate random inputs from this seed");
    app.add_flag("--degrees", degrees, "emit angles in degrees");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    Job job;
    if (const char *env = std::getenv("UHLMANN_TOLERANCE")) {
        char *end = nullptr;
        const double t = std::strtod(env, &end);
        if (end != env && t > 0.0)
            job.tolerance = t;
    }

    const bool mode_set = app.count("--mode") > 0;
    const bool subdiv_set = app.count("--subdivisions") > 0;
    const bool grid_set = app.count("--radius-grid") > 0;
    const bool tol_set = app.count("--tolerance") > 0;
    const bool seed_set = app.count("--seed") > 0;
    const bool degrees_set = app.count("--degrees") > 0;
    const bool format_set = app.count("--format") > 0;
    const bool points_set =
        app.count("--u") + app.count("--v") + app.count("--w") > 0;

    if (mode_set)
        job.mode = mode;
    if (points_set) {
        const std::array<std::pair<const char *, std::string *>, 3> flags{
            {{"--u", &u_str}, {"--v", &v_str}, {"--w", &w_str}}};
        for (const auto &[name, str] : flags) {
            if (app.count(name) == 0)
                continue;
            Triple t{};
            if (!parse_triple(*str, t))
                return fail_validation(std::string(name) +
                                       " must be three comma-separated numbers");
            job.points.push_back(t);
        }
    }
    if (subdiv_set)
        job.subdivisions = subdivisions;
    if (grid_set)
        job.radius_grid = radius_grid;
    if (tol_set)
        job.tolerance = tolerance;
    if (seed_set) {
        job.seed = static_cast<unsigned long long>(seed);
        job.have_seed = true;
    }
    if (degrees_set)
        job.degrees = degrees;
    if (format_set)
        job.format = format;

    if (!input.empty()) {
        const int rc =
            load_json_job(input, job, mode_set, subdiv_set, grid_set, tol_set,
                          seed_set, degrees_set, format_set, points_set);
        if (rc != 0)
            return rc;
    }

    if (job.mode.empty())
        return fail_validation("--mode is required (or a 'mode' key in --input)");
    if (job.format != "csv" && job.format != "json-lines")
        return fail_validation("format must be csv or json-lines, got '" +
                               job.format + "'");
    if (job.subdivisions == 0 || job.subdivisions < -1)
        return fail_validation("subdivisions must be positive");
    if (!(job.tolerance > 0.0))
        return fail_validation("tolerance must be positive");

    if (job.mode == "triangle")
        return run_triangle(job);
    if (job.mode == "polygon")
        return run_polygon(job);
    if (job.mode == "geodesic-refine")
        return run_geodesic_refine(job);
    if (job.mode == "pure-limit")
        return run_pure_limit(job);
    if (job.mode == "compare-slater")
        return run_compare_slater(job);
    if (job.mode == "hopf-check")
        return run_hopf_check(job);
    if (job.mode == "sweep")
        return run_sweep(job);
    return fail_validation("unknown mode '" + job.mode + "'");
}
