#include "decocat/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "decocat/cat_state.hpp"
#include "decocat/interference.hpp"
#include "decocat/measurement.hpp"
#include "decocat/run_metadata.hpp"

namespace decocat::cli {

namespace {

namespace fs = std::filesystem;

std::ofstream open_output(const fs::path& path)
{
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
        }
    }
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    return os;
}

void finish(std::ofstream& os, const fs::path& path)
{
    os.flush();
    if (!os) {
        throw IoError("write failed for " + path.string());
    }
}

RunMetadata base_metadata(const std::string& command_line)
{
    RunMetadata meta;
    meta.command_line = command_line;
    meta.timestamp = iso8601_now();
    return meta;
}

template <typename Body>
int guarded(std::ostream& log, Body&& body)
{
    try {
        return body();
    } catch (const IoError& e) {
        log << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const std::domain_error& e) {
        log << "error: " << e.what() << '\n';
        return kInvalidArguments;
    }
}

std::vector<double> resolve_q_env(const FringesOptions& opts)
{
    if (!opts.q_env.empty() && !opts.betas.empty()) {
        throw std::invalid_argument("give either --q-env or --beta, not both");
    }
    if (!opts.betas.empty()) {
        std::vector<double> q;
        for (double beta : opts.betas) {
            q.push_back(std::exp(-2.0 * beta * beta));
        }
        return q;
    }
    return opts.q_env.empty() ? kDefaultQEnvSweep : opts.q_env;
}

}  // namespace

int cmd_fringes(const FringesOptions& opts, const std::string& command_line, std::ostream& log)
{
    return guarded(log, [&] {
        if (!(opts.alpha > 0.0)) {
            throw std::invalid_argument("--alpha must be positive");
        }
        opts.grid.validate();
        const auto q_list = resolve_q_env(opts);
        for (double q : q_list) {
            if (!(q >= 0.0 && q <= 1.0)) {
                throw std::invalid_argument("q_env values must lie in [0, 1]");
            }
        }

        std::error_code ec;
        fs::create_directories(opts.out, ec);
        if (ec) {
            throw IoError("cannot create output directory " + opts.out.string() + ": " + ec.message());
        }

        auto meta = base_metadata(command_line);
        meta.add("alpha", opts.alpha)
            .add("grid_min", opts.grid.grid_min)
            .add("grid_max", opts.grid.grid_max)
            .add("points", std::to_string(opts.grid.points));

        const fs::path summary_path = opts.out / "summary.csv";
        auto summary = open_output(summary_path);
        meta.write(summary);
        summary << "q_env,visibility_measured,visibility_analytic\n";

        for (std::size_t i = 0; i < q_list.size(); ++i) {
            const double q = q_list[i];
            const auto density = cat::fringe_marginal(opts.alpha, q, opts.grid);
            const double measured = cat::fringe_visibility(density);
            const double analytic = interference::environment_visibility(q);

            const fs::path path = opts.out / ("fringe_" + std::to_string(i) + ".csv");
            auto os = open_output(path);
            auto file_meta = meta;
            file_meta.add("q_env", q).add("normalization_residual", density.normalization_residual);
            file_meta.write(os);
            os << "p,density\n";
            for (std::size_t k = 0; k < density.size(); ++k) {
                os << format_double(density.at(k)) << ',' << format_double(density.values[k]) << '\n';
            }
            finish(os, path);

            summary << format_double(q) << ',' << format_double(measured) << ',' << format_double(analytic)
                    << '\n';
            log << "q_env=" << q << " visibility=" << measured << " -> " << path.string() << '\n';
        }
        finish(summary, summary_path);
        return static_cast<int>(kSuccess);
    });
}

int cmd_dynamics(const DynamicsOptions& opts, const std::string& command_line, std::ostream& log)
{
    return guarded(log, [&] {
        if (!(opts.alpha > 0.0)) {
            throw std::invalid_argument("--alpha must be positive");
        }
        if (!measurement::identical_mode_limit_holds(opts.n, opts.alpha)) {
            throw std::invalid_argument("n * alpha^2 must be at least 10");
        }
        if (opts.m_max >= opts.n) {
            throw std::invalid_argument("--m-max must be below --n");
        }
        if (opts.m_step == 0) {
            throw std::invalid_argument("--m-step must be positive");
        }

        auto os = open_output(opts.out);
        auto meta = base_metadata(command_line);
        meta.add("alpha", opts.alpha)
            .add("n", std::to_string(opts.n))
            .add("m_step", std::to_string(opts.m_step))
            .add("m_max", std::to_string(opts.m_max));
        meta.write(os);
        os << "m,photons_reduced,V_eq19,V_schmidt,K\n";
        for (std::size_t m = 0; m <= opts.m_max; m += opts.m_step) {
            const auto cat_state = MultimodeCat::identical(opts.alpha, opts.n, m);
            const auto summary = cat::effective_summary(cat::effective_params(cat_state));
            const double v_closed = cat::env_visibility_identical(m, opts.alpha);
            os << m << ',' << format_double(static_cast<double>(m) * opts.alpha * opts.alpha) << ','
               << format_double(v_closed) << ',' << format_double(summary.V) << ',' << format_double(summary.K)
               << '\n';
        }
        finish(os, opts.out);
        log << "wrote " << opts.out.string() << '\n';
        return static_cast<int>(kSuccess);
    });
}

int cmd_collapse(const CollapseOptions& opts, const std::string& command_line, std::ostream& log)
{
    return guarded(log, [&] {
        if (!(opts.alpha > 0.0)) {
            throw std::invalid_argument("--alpha must be positive");
        }
        if (opts.trajectories < 1) {
            throw std::invalid_argument("--trajectories must be at least 1");
        }
        if (opts.n && !measurement::identical_mode_limit_holds(*opts.n, opts.alpha)) {
            throw std::invalid_argument("n * alpha^2 must be at least 10 for the collapse model");
        }
        if (opts.n && opts.m_max >= *opts.n) {
            throw std::invalid_argument("--m-max must be below --n");
        }

        auto os = open_output(opts.out);
        const auto runs = measurement::ensemble(opts.alpha, opts.m_max, opts.trajectories, opts.seed, opts.threads);

        auto meta = base_metadata(command_line);
        meta.add("alpha", opts.alpha)
            .add("m_max", std::to_string(opts.m_max))
            .add("trajectories", std::to_string(opts.trajectories));
        if (opts.n) {
            meta.add("n", std::to_string(*opts.n));
        }
        meta.seed = opts.seed;
        meta.rng_algorithm = std::string(numerics::kRngAlgorithm);
        meta.write(os);

        os << "trajectory_id,m,y,p_plus,health\n";
        std::string row;
        for (std::size_t id = 0; id < runs.size(); ++id) {
            const auto& t = runs[id];
            for (std::size_t m = 0; m < t.p_plus_series.size(); ++m) {
                row.clear();
                row += std::to_string(id);
                row += ',';
                row += std::to_string(m);
                row += ',';
                if (m > 0) {
                    row += format_double(t.ys[m - 1]);
                }
                row += ',';
                row += format_double(t.p_plus_series[m]);
                row += ',';
                row += format_double(t.h_series[m]);
                row += '\n';
                os << row;
            }
        }
        finish(os, opts.out);
        log << "wrote " << runs.size() << " trajectories to " << opts.out.string() << '\n';
        return static_cast<int>(kSuccess);
    });
}

}  // namespace decocat::cli
