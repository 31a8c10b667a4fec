#include "CLI11.hpp"
#include "twistrep/duality.hpp"
#include "twistrep/textio.hpp"
#include "twistrep/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace twistrep;

namespace {

enum Exit { ok = 0, validation = 1, invariant = 2, io = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Job {
    std::string datum_path, gamma_text, g_text, out_path, word;
    std::optional<int> kappa;
    std::uint64_t seed = 1;
    int fuzz = 20;
    bool describe = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DatumDescription load_datum(const Job& job) {
    if (job.datum_path.empty()) throw ValidationError("--datum is required", {});
    try {
        return parse_datum_text(read_file(job.datum_path));
    } catch (const ParseError& e) {
        throw ValidationError(job.datum_path + ": " + e.what(), {});
    }
}

RatVec required_vec(const std::string& text, const char* flag, int rank) {
    if (text.empty()) throw ValidationError(std::string(flag) + " is required for this command", {});
    RatVec v = parse_ratvec(text);
    if (v.rank() != rank)
        throw ValidationError(std::string(flag) + " has " + std::to_string(v.rank()) + " entries, rank is " +
                                  std::to_string(rank),
                              {});
    return v;
}

std::string kind_label(const KappaOrbit& k) { return std::to_string(static_cast<int>(k.kind)); }

std::vector<KappaOrbit> selected_orbits(const RootDatum& d, const Job& job) {
    auto all = kappa_orbits(d);
    if (!job.kappa) return all;
    if (*job.kappa < 0 || *job.kappa >= static_cast<int>(all.size()))
        throw ValidationError("--kappa " + std::to_string(*job.kappa) + " out of range; there are " +
                                  std::to_string(all.size()) + " kappa orbits",
                              {});
    return {all[*job.kappa]};
}

std::shared_ptr<const ExtBlock> ext_block_of(const DatumDescription& desc, const Job& job) {
    RootDatum d = build_datum(desc);
    return make_ext_block(desc, required_vec(job.gamma_text, "--gamma", d.rank()),
                          required_vec(job.g_text, "--g", d.rank()));
}

int run_describe(const DatumDescription& desc, std::ostream& out) {
    RootDatum d = build_datum(desc);
    out << "rank " << d.rank() << " semisimple_rank " << d.semisimple_rank() << '\n';
    out << "twisted_involutions " << enumerate_twisted_involutions(d).size() << '\n';
    out << "rho " << rho(d).to_string() << " rho_check " << rho_check(d).to_string() << '\n';
    int i = 0;
    for (const auto& k : kappa_orbits(d))
        out << "kappa " << i++ << " roots " << k.roots_string() << " type " << kind_label(k) << " length " << k.length
            << '\n';
    return ok;
}

int run_kgb(const DatumDescription& desc, const Job& job, std::ostream& out) {
    if (job.describe) return run_describe(desc, out);
    RootDatum d = build_datum(desc);
    RatVec g = required_vec(job.g_text, "--g", d.rank());
    std::vector<TwistedInvolution> invs;
    if (job.word.empty()) {
        invs = enumerate_twisted_involutions(d);
    } else {
        invs.push_back(theta_of(d, d.from_word(parse_word(job.word))));
    }
    for (const auto& inv : invs)
        for (const auto& x : enumerate_kgb(d, g, inv.w)) out << "w=" << inv.w.to_string() << " ell=" << to_string(x.ell) << '\n';
    return ok;
}

int run_block(const DatumDescription& desc, const Job& job, std::ostream& out) {
    auto datum = std::make_shared<const RootDatum>(build_datum(desc));
    Block blk(datum, required_vec(job.gamma_text, "--gamma", datum->rank()),
              required_vec(job.g_text, "--g", datum->rank()));
    int i = 0;
    for (const auto& p : blk.params())
        out << i++ << " w=" << p.x.inv.w.to_string() << " ell=" << to_string(p.x.ell) << " lambda=" << to_string(p.y.lambda)
            << '\n';
    return ok;
}

int run_extblock(const DatumDescription& desc, const Job& job, std::ostream& out) {
    auto blk = ext_block_of(desc, job);
    for (int i = 0; i < blk->size(); ++i) out << format_ext_record(i, blk->param(i)) << '\n';
    return ok;
}

int run_hecke(const DatumDescription& desc, const Job& job, std::ostream& out) {
    auto blk = ext_block_of(desc, job);
    for (const auto& k : selected_orbits(blk->datum(), job)) {
        LaurentMatrix T = matrix_of(*blk, k);
        out << "kappa " << k.roots_string() << " type " << kind_label(k) << " size " << T.size() << '\n';
        for (int i = 0; i < T.size(); ++i) {
            for (int j = 0; j < T.size(); ++j) out << (j ? " " : "") << T(i, j).to_string();
            out << '\n';
        }
    }
    return ok;
}

int run_verify(const DatumDescription& desc, const Job& job, std::ostream& out) {
    auto blk = ext_block_of(desc, job);
    std::mt19937_64 rng(job.seed);
    std::vector<SuiteResult> results{quadratic_suite(*blk),
                                     braid_suite(*blk),
                                     closure_suite(*blk, rng, job.fuzz),
                                     sgn_suite(*blk, rng, job.fuzz),
                                     z_epsilon_suite(*blk, rng, job.fuzz),
                                     round_trip_suite(*blk),
                                     normal_form_suite(*blk, 3)};
    bool all = true;
    for (const auto& r : results) {
        out << r.to_string() << '\n';
        all = all && r.ok;
    }
    out << (all ? "OK" : "FAIL") << '\n';
    return all ? ok : invariant;
}

int run_dualcheck(const DatumDescription& desc, const Job& job, std::ostream& out) {
    auto blk = ext_block_of(desc, job);
    auto dual = dual_ext_block(*blk);
    DualBlockMap map = dual_block_map(*blk, *dual);
    bool all = true;
    for (const auto& k : selected_orbits(blk->datum(), job)) {
        TransposeReport r = check_transpose(k, *blk, *dual, map);
        out << "kappa " << k.roots_string() << ' ' << r.to_string() << '\n';
        all = all && r.ok;
    }
    return all ? ok : invariant;
}

void report(const char* kind, const std::string& message) {
    std::cerr << "error kind=" << kind << " message=" << message << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted parameters, extended blocks and Hecke operators"};
    app.require_subcommand(1);
    Job job;
    app.add_option("--datum", job.datum_path, "root datum file");
    app.add_option("--gamma", job.gamma_text, "infinitesimal character, e.g. \"[1 1/2]\"");
    app.add_option("--g", job.g_text, "cocharacter datum, e.g. \"[1 1]\"");
    app.add_option("--out", job.out_path, "write output here instead of stdout");
    app.add_option("--seed", job.seed, "seed for the fuzz suites in verify");

    auto* kgb = app.add_subcommand("kgb", "KGB classes per twisted involution");
    kgb->add_option("--w", job.word, "restrict to one twisted involution, e.g. s0.s1 or e");
    kgb->add_flag("--describe", job.describe, "summarize the datum and its kappa orbits");
    auto* blk = app.add_subcommand("block", "aligned pairs (x,y) of the block");
    auto* ext = app.add_subcommand("extblock", "delta0-fixed parameters with canonical witnesses and (z, zeta, eps)");
    auto* hecke = app.add_subcommand("hecke", "matrices of T_kappa on the extended block");
    auto* verify = app.add_subcommand("verify", "invariant suites on the extended block");
    verify->add_option("--fuzz", job.fuzz, "fuzzed extensions per parameter");
    auto* dualcheck = app.add_subcommand("dualcheck", "transpose check against the dual block");
    for (auto* sub : {hecke, dualcheck}) sub->add_option("--kappa", job.kappa, "index of one kappa orbit");
    for (auto* sub : {kgb, blk, ext, hecke, verify, dualcheck}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : validation;
    }

    std::ostringstream out;
    int code = ok;
    try {
        const DatumDescription desc = load_datum(job);
        if (kgb->parsed()) code = run_kgb(desc, job, out);
        else if (blk->parsed()) code = run_block(desc, job, out);
        else if (ext->parsed()) code = run_extblock(desc, job, out);
        else if (hecke->parsed()) code = run_hecke(desc, job, out);
        else if (verify->parsed()) code = run_verify(desc, job, out);
        else code = run_dualcheck(desc, job, out);
    } catch (const IoError& e) {
        report("io", e.what());
        return io;
    } catch (const InvariantError& e) {
        report("invariant", e.what());
        return invariant;
    } catch (const std::logic_error& e) {
        // std::invalid_argument and std::domain_error derive from logic_error: bad or unsupported input
        const bool refused = dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e);
        report(refused ? "validation" : "invariant", e.what());
        return refused ? validation : invariant;
    }

    if (job.out_path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream file(job.out_path);
        if (!(file << out.str())) {
            report("io", "cannot write " + job.out_path);
            return io;
        }
    }
    return code;
}
