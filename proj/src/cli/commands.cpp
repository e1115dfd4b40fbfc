#include "padicsum/commands.hpp"

#include <fstream>
#include <sstream>

#include "padicsum/a_table.hpp"
#include "padicsum/bfile.hpp"
#include "padicsum/closed_forms.hpp"
#include "padicsum/eps_split.hpp"
#include "padicsum/errors.hpp"
#include "padicsum/finite_identity.hpp"
#include "padicsum/ode.hpp"
#include "padicsum/padic_approx.hpp"
#include "padicsum/padic_verify.hpp"
#include "padicsum/parallel.hpp"
#include "padicsum/sequences.hpp"
#include "padicsum/telescope.hpp"
#include "padicsum/uv.hpp"

namespace padicsum {

namespace {

using nlohmann::json;

// Default sizes when the corresponding flag is absent.
constexpr std::size_t kTablesKmax = 11;
constexpr std::size_t kFiniteKmax = 15;
constexpr std::uint64_t kFiniteN = 25;
constexpr std::size_t kPadicKmax = 8;
constexpr std::uint64_t kPadicN = 200;
constexpr std::uint64_t kTelescopeN = 15;
constexpr std::size_t kTelescopeCount = 20;
constexpr std::uint64_t kOdeN = 50;
constexpr std::size_t kSeqKmax = 10;

std::vector<Prime> default_primes() {
    return {Prime(2), Prime(3), Prime(5), Prime(7), Prime(11)};
}

std::vector<BigRational> finite_x_grid() {
    std::vector<BigRational> xs;
    for (int v = -3; v <= 3; ++v) {
        if (v != 0) {
            xs.emplace_back(v);
        }
    }
    xs.emplace_back(1, 2);
    xs.emplace_back(-2, 3);
    return xs;
}

// Writes `text` to cfg.out when set, else to `out`.
int emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
    if (cfg.out.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        err << "error: cannot write " << cfg.out.string() << '\n';
        return kExitUsage;
    }
    f << text;
    return kExitOk;
}

std::string sign_key(Sign s) {
    return s == Sign::plus ? "+1" : "-1";
}

// Cross-checks that must hold for any table, cached or fresh.
void check_tables(const GeneratedTables& t) {
    auto rep = verify_a_recurrence(t.a);
    if (!rep.ok()) {
        throw CrossCheckError("A recurrence fails at k = " + std::to_string(*rep.first_failure));
    }
    check_structure(t.a);
    check_closed_forms(t.a);
    auto rec = uv_by_recurrence(t.uv.kmax(), t.eps());
    if (rec.U != t.uv.U || rec.V != t.uv.V) {
        throw CrossCheckError("U/V table disagrees with the U/V recurrences");
    }
}

void write_records(std::ostream& os, const std::vector<CheckRecord>& records, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json: {
            json arr = json::array();
            for (const auto& r : records) {
                arr.push_back(r.to_json());
            }
            os << arr.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            os << "check,params,verdict,residual,boundary,detail\n";
            for (const auto& r : records) {
                std::string params = r.params.dump();
                std::string quoted;
                for (char c : params) {
                    quoted += c;
                    if (c == '"') {
                        quoted += '"';
                    }
                }
                os << r.check << ",\"" << quoted << "\"," << verdict_text(r.pass) << ','
                   << (r.residual ? r.residual->to_string() : "") << ','
                   << (r.boundary ? r.boundary->to_string() : "") << ',' << r.detail << '\n';
            }
            break;
        default:
            write_table(os, records);
            std::size_t passed = 0;
            for (const auto& r : records) {
                passed += r.pass ? 1 : 0;
            }
            os << passed << '/' << records.size() << " checks passed\n";
            break;
    }
}

json spec_params(const TelescopeSpec& s) {
    json blocks = json::array();
    for (const auto& b : s.blocks()) {
        blocks.push_back({b.mu, b.nu, b.lambda});
    }
    return {{"blocks", blocks}, {"alpha", s.alpha()}, {"beta", s.beta()},
            {"eps", sign_key(s.eps())}, {"x", s.x().to_string()}, {"aux", s.aux().to_string()}};
}

}  // namespace

GeneratedTables obtain_tables(const RunConfig& cfg, std::size_t kmax, Sign eps) {
    if (cfg.no_cache) {
        return build_tables(kmax, eps);
    }
    TableCache cache(cfg.cache_dir.empty() ? default_cache_dir() : cfg.cache_dir);
    return cache.get_or_build(kmax, eps);
}

std::vector<CheckRecord> verify_finite(const RunConfig& cfg) {
    std::size_t kmax = cfg.kmax.value_or(kFiniteKmax);
    std::uint64_t n_max = cfg.n_max.value_or(kFiniteN);
    std::vector<BigRational> xs = cfg.x ? std::vector<BigRational>{*cfg.x} : finite_x_grid();
    std::vector<GeneratedTables> tables;
    for (Sign s : cfg.signs()) {
        tables.push_back(obtain_tables(cfg, std::max<std::size_t>(kmax, 1), s));
    }
    std::size_t per_table = kmax * xs.size();
    return parallel_map(tables.size() * per_table, [&](std::size_t idx) {
        const auto& t = tables[idx / per_table];
        std::size_t k = (idx % per_table) / xs.size() + 1;
        const auto& x = xs[idx % xs.size()];
        json params = {{"eps", sign_key(t.eps())}, {"k", k}, {"x", x.to_string()}, {"n_max", n_max}};
        auto sweep = finite_identity_sweep(t, k, x, n_max);
        for (const auto& r : sweep) {
            if (!r.holds()) {
                auto rec = CheckRecord::from_partial_sum("finite", params, r);
                rec.detail = "n = " + std::to_string(r.n_terms);
                return rec;
            }
        }
        return CheckRecord::from_partial_sum("finite", params, sweep.back());
    });
}

std::vector<CheckRecord> verify_telescope(const RunConfig& cfg) {
    std::uint64_t n_max = cfg.n_max.value_or(kTelescopeN);
    std::vector<std::pair<std::string, TelescopeSpec>> specs;
    specs.emplace_back("telescope-sum-n!n", factorial_times_n_spec());
    specs.emplace_back("telescope-power-family",
                       TelescopeSpec::factorial_power_family(1, 1, 0, 1, cfg.x.value_or(1)));
    for (auto& s : random_telescope_specs(cfg.seed, kTelescopeCount)) {
        specs.emplace_back("telescope-random", std::move(s));
    }
    return parallel_map(specs.size(), [&](std::size_t i) {
        const auto& [name, spec] = specs[i];
        json params = spec_params(spec);
        params["N_max"] = n_max;
        PartialSumResult last;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            last = telescope_check(spec, n);
            if (!last.holds()) {
                auto rec = CheckRecord::from_partial_sum(name, params, last);
                rec.detail = "N = " + std::to_string(n);
                return rec;
            }
        }
        return CheckRecord::from_partial_sum(name, params, last);
    });
}

std::vector<CheckRecord> verify_padic(const RunConfig& cfg) {
    std::uint64_t n_max = cfg.n_max.value_or(kPadicN);
    std::vector<Prime> primes = cfg.primes.empty() ? default_primes() : cfg.primes;

    struct Job {
        const GeneratedTables* tables;
        SeriesSpec spec;
        BigRational claimed;
        Prime prime;
    };
    std::vector<GeneratedTables> tables;
    std::vector<Job> jobs;
    bool custom = cfg.claim || !cfg.coeffs.empty();
    if (custom) {
        Sign eps = cfg.eps.value_or(Sign::plus);
        BigRational x = cfg.x.value_or(1);
        SeriesSpec spec = cfg.coeffs.empty() ? SeriesSpec::single(cfg.k.value_or(1), eps, x)
                                             : SeriesSpec(eps, cfg.coeffs, x);
        tables.push_back(obtain_tables(cfg, spec.degree(), eps));
        BigRational claimed = cfg.claim ? *cfg.claim : series_claim(tables[0], spec);
        for (const auto& p : primes) {
            jobs.push_back({&tables[0], spec, claimed, p});
        }
    } else {
        std::size_t kmax = cfg.kmax.value_or(kPadicKmax);
        std::vector<BigRational> xs =
            cfg.x ? std::vector<BigRational>{*cfg.x}
                  : std::vector<BigRational>{BigRational(1), BigRational(-1), BigRational(2)};
        auto signs = cfg.signs();
        tables.reserve(signs.size());
        for (Sign s : signs) {
            tables.push_back(obtain_tables(cfg, kmax, s));
        }
        for (const auto& t : tables) {
            for (std::size_t k = 1; k <= kmax; ++k) {
                for (const auto& x : xs) {
                    auto spec = SeriesSpec::single(k, t.eps(), x);
                    auto claimed = series_claim(t, spec);
                    for (const auto& p : primes) {
                        jobs.push_back({&t, spec, claimed, p});
                    }
                }
            }
        }
    }

    return parallel_map(jobs.size(), [&](std::size_t i) {
        const Job& job = jobs[i];
        json coeffs = json::array();
        for (const auto& c : job.spec.coeffs) {
            coeffs.push_back(c.to_string());
        }
        CheckRecord rec;
        rec.check = "padic";
        rec.params = {{"eps", sign_key(job.spec.eps)}, {"C", coeffs},
                      {"x", job.spec.x.to_string()}, {"p", job.prime.value()},
                      {"claim", job.claimed.to_string()}, {"N_max", n_max}};
        try {
            auto v = padic_sum_verify(*job.tables, job.spec, job.claimed, job.prime, n_max);
            rec.pass = v.pass;
            if (v.first_violation) {
                const auto& s = v.samples[*v.first_violation - 1];
                rec.residual = s.partial - job.claimed;
                rec.detail = "first violation at N = " + std::to_string(*v.first_violation) +
                             ": v_p(error) = " + s.error.to_string() + " < " + s.bound.to_string();
            } else if (!v.error_grows) {
                rec.detail = "error valuations do not grow";
            } else {
                const auto& s = v.samples.back();
                rec.detail = "v_p(error) = " + s.error.to_string() + " at N = " +
                             std::to_string(s.n_terms);
            }
        } catch (const DomainError& e) {
            rec.pass = false;
            rec.detail = e.what();
        }
        return rec;
    });
}

std::vector<CheckRecord> verify_ode(const RunConfig& cfg) {
    std::uint64_t n_max = cfg.n_max.value_or(kOdeN);
    std::vector<std::uint64_t> orders;
    for (std::uint64_t n = 3; n <= n_max; ++n) {
        orders.push_back(n);
    }
    auto pairs = parallel_map(orders.size(), [&](std::size_t i) {
        return std::pair{ode_check_first(orders[i]).to_record(),
                         ode_check_second(orders[i]).to_record()};
    });
    std::vector<CheckRecord> out;
    for (auto& [a, b] : pairs) {
        out.push_back(std::move(a));
    }
    for (auto& [a, b] : pairs) {
        out.push_back(std::move(b));
    }
    return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::string& suite = cfg.subcommand;
    std::vector<CheckRecord> records;
    auto append = [&](std::vector<CheckRecord> r) {
        records.insert(records.end(), std::make_move_iterator(r.begin()),
                       std::make_move_iterator(r.end()));
    };
    bool all = suite == "all";
    if (all || suite == "finite") append(verify_finite(cfg));
    if (all || suite == "telescope") append(verify_telescope(cfg));
    if (all || suite == "padic") append(verify_padic(cfg));
    if (all || suite == "ode") append(verify_ode(cfg));
    OutputFormat fmt = cfg.format_or(OutputFormat::text);
    if (fmt == OutputFormat::bfile) {
        err << "error: bfile output is only available for seq\n";
        return kExitUsage;
    }
    std::ostringstream os;
    write_records(os, records, fmt);
    if (int rc = emit(cfg, os.str(), out, err); rc != kExitOk) {
        return rc;
    }
    for (const auto& r : records) {
        if (!r.pass) {
            return kExitFail;
        }
    }
    return kExitOk;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::size_t kmax = cfg.kmax.value_or(kTablesKmax);
    OutputFormat fmt = cfg.format_or(OutputFormat::text);
    if (fmt == OutputFormat::bfile) {
        err << "error: bfile output is only available for seq\n";
        return kExitUsage;
    }
    std::vector<GeneratedTables> tables;
    for (Sign s : cfg.signs()) {
        tables.push_back(obtain_tables(cfg, kmax, s));
        check_tables(tables.back());
    }
    UVIntTable ints = generate_uv_integers(kmax);
    for (const auto& t : tables) {
        if (t.eps() == Sign::plus) {
            cross_check_uv(ints, t.uv);
        }
    }

    std::ostringstream os;
    if (fmt == OutputFormat::json) {
        json doc;
        doc["version"] = kTableFormatVersion;
        doc["tables"] = json::array();
        for (const auto& t : tables) {
            json j = to_json(t);
            // U/V are reported for k = 1 .. kmax, matching u/v.
            j["U"] = json::array();
            j["V"] = json::array();
            for (std::size_t k = 1; k <= kmax; ++k) {
                j["U"].push_back(poly_to_json(t.uv.u_poly(k)));
                j["V"].push_back(poly_to_json(t.uv.v_poly(k)));
            }
            doc["tables"].push_back(std::move(j));
        }
        doc["u"] = json::array();
        doc["v"] = json::array();
        for (std::size_t k = 0; k < ints.kmax(); ++k) {
            doc["u"].push_back(ints.u[k].to_string());
            doc["v"].push_back(ints.v[k].to_string());
        }
        os << doc.dump(2) << '\n';
    } else if (fmt == OutputFormat::csv) {
        os << "table,eps,k,j,i,value\n";
        for (const auto& t : tables) {
            std::string e = sign_key(t.eps());
            for (std::size_t k = 0; k <= kmax; ++k) {
                const auto& coeffs = t.a[k].coefficients();
                for (std::size_t j = 0; j < coeffs.size(); ++j) {
                    const auto& cn = coeffs[j].coefficients();
                    for (std::size_t i = 0; i < cn.size(); ++i) {
                        os << "A," << e << ',' << k << ',' << j << ',' << i << ',' << cn[i] << '\n';
                    }
                }
            }
            for (std::size_t k = 1; k <= kmax; ++k) {
                for (const char* name : {"U", "V"}) {
                    const RatPoly& p = name[0] == 'U' ? t.uv.u_poly(k) : t.uv.v_poly(k);
                    const auto& c = p.coefficients();
                    for (std::size_t i = 0; i < c.size(); ++i) {
                        os << name << ',' << e << ',' << k << ",," << i << ',' << c[i] << '\n';
                    }
                }
            }
        }
        for (std::size_t k = 1; k <= ints.kmax(); ++k) {
            os << "u,+1," << k << ",,," << ints.u[k - 1] << '\n';
            os << "v,+1," << k << ",,," << ints.v[k - 1] << '\n';
        }
    } else {
        for (const auto& t : tables) {
            os << "# eps = " << sign_key(t.eps()) << '\n';
            for (std::size_t k = 0; k <= kmax; ++k) {
                os << "A_" << k << " = " << t.a[k].to_string() << '\n';
            }
            for (std::size_t k = 1; k <= kmax; ++k) {
                os << "U_" << k << " = " << t.uv.u_poly(k).to_string("x") << '\n';
            }
            for (std::size_t k = 1; k <= kmax; ++k) {
                os << "V_" << k << " = " << t.uv.v_poly(k).to_string("x") << '\n';
            }
        }
        if (tables.size() == 2) {
            os << "# symbolic (e = eps)\n";
            for (std::size_t k = 0; k <= kmax; ++k) {
                os << "A_" << k << " = " << render_symbolic(tables[0].a[k], tables[1].a[k]) << '\n';
            }
            for (std::size_t k = 1; k <= kmax; ++k) {
                os << "U_" << k << " = "
                   << render_symbolic(tables[0].uv.u_poly(k), tables[1].uv.u_poly(k)) << '\n';
                os << "V_" << k << " = "
                   << render_symbolic(tables[0].uv.v_poly(k), tables[1].uv.v_poly(k)) << '\n';
            }
        }
        if (ints.kmax() > 0) {
            os << "# (u_k, v_k)\n";
            for (std::size_t k = 1; k <= ints.kmax(); ++k) {
                os << "u_" << k << " = " << ints.u[k - 1] << "  v_" << k << " = " << ints.v[k - 1]
                   << '\n';
            }
        }
    }
    return emit(cfg, os.str(), out, err);
}

int cmd_seq(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    SequenceId id = SequenceId::parse(cfg.subcommand);
    auto seq = sequence_slice(id, cfg.kmax.value_or(kSeqKmax));
    std::ostringstream os;
    switch (cfg.format_or(OutputFormat::bfile)) {
        case OutputFormat::bfile:
            os << "# " << id.to_string() << '\n';
            BFile::from_sequence(seq).write(os);
            break;
        case OutputFormat::csv:
            os << "index,value\n";
            for (std::size_t i = 0; i < seq.values.size(); ++i) {
                os << seq.first_index + static_cast<std::int64_t>(i) << ',' << seq.values[i] << '\n';
            }
            break;
        case OutputFormat::json: {
            json values = json::array();
            for (const auto& v : seq.values) {
                values.push_back(v.to_string());
            }
            json doc = {{"sequence", id.to_string()}, {"first_index", seq.first_index},
                        {"values", values}};
            os << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::text:
            for (std::size_t i = 0; i < seq.values.size(); ++i) {
                os << (i ? ", " : "") << seq.values[i];
            }
            os << '\n';
            break;
    }
    return emit(cfg, os.str(), out, err);
}

int cmd_seq_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    SequenceId id = SequenceId::parse(cfg.subcommand);
    BFile ref;
    try {
        ref = BFile::load(cfg.bfile.string());
    } catch (const BFileError& e) {
        err << "error: " << cfg.bfile.string() << ": " << e.what() << '\n';
        return kExitUsage;
    }
    auto seq = sequence_slice(id, cfg.kmax.value_or(kSeqKmax));
    auto rep = compare_up_to_sign(seq, ref, cfg.offset);
    std::ostringstream os;
    if (cfg.format_or(OutputFormat::text) == OutputFormat::json) {
        json doc = {{"sequence", id.to_string()}, {"bfile", cfg.bfile.string()},
                    {"offset", cfg.offset}, {"compared", rep.compared},
                    {"match", rep.match()}};
        if (rep.first_divergence) {
            doc["first_divergence"] = *rep.first_divergence;
        }
        os << doc.dump(2) << '\n';
    } else if (rep.match()) {
        os << "match: " << id.to_string() << " agrees up to sign on " << rep.compared
           << " indices\n";
    } else if (rep.first_divergence) {
        auto i = *rep.first_divergence;
        auto local = seq.values[static_cast<std::size_t>(i - seq.first_index)];
        os << "mismatch at index " << i << ": " << local << " vs " << *ref.at(i + cfg.offset)
           << '\n';
    } else {
        os << "mismatch: no overlapping indices\n";
    }
    if (int rc = emit(cfg, os.str(), out, err); rc != kExitOk) {
        return rc;
    }
    return rep.match() ? kExitOk : kExitFail;
}

int cmd_cache(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    TableCache cache(cfg.cache_dir.empty() ? default_cache_dir() : cfg.cache_dir);
    if (cfg.subcommand == "clear") {
        out << "removed " << cache.clear() << " entries from " << cache.dir().string() << '\n';
    } else {
        out << "cache directory: " << cache.dir().string() << '\n'
            << "entries: " << cache.entry_count() << '\n'
            << "format: " << kTableFormatVersion << '\n';
    }
    return kExitOk;
}

int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<Prime> primes = cfg.primes.empty() ? default_primes() : cfg.primes;
    OutputFormat fmt = cfg.format_or(OutputFormat::text);
    json doc = json::array();
    std::ostringstream os;
    for (const auto& literal : cfg.values) {
        BigRational q = parse_rational_literal(literal);
        for (const auto& p : primes) {
            auto a = expand(q, p, cfg.precision);
            if (fmt == OutputFormat::json) {
                json j = a.to_json();
                j["q"] = q.to_string();
                doc.push_back(std::move(j));
            } else {
                os << q << "  " << a.to_string() << '\n';
            }
        }
    }
    if (fmt == OutputFormat::json) {
        os << doc.dump(2) << '\n';
    }
    return emit(cfg, os.str(), out, err);
}

}  // namespace padicsum
