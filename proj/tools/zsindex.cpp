// Command-line front end: index / dedekind / verify / collisions / theorem.
// Exit codes: 0 computed or verified, 2 a counterexample report was
// emitted, 1 usage or I/O error.

#include <algorithm>
#include <array>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zsindex/arith.hpp"
#include "zsindex/dedekind.hpp"
#include "zsindex/report.hpp"
#include "zsindex/verify.hpp"
#include "zsindex/zerosum.hpp"

namespace {

using namespace zsindex;

int run_index(const std::string& seq_text, const std::string& format, bool verbose) {
    ZsSeq seq = ZsSeq::parse(seq_text);
    if (seq.length() != 4) throw std::invalid_argument("index: expected \"n:x1,x2,x3,x4\"");
    if (!is_zero_sum(seq)) throw std::invalid_argument("index: sequence is not zero-sum");
    if (!is_minimal_zero_sum(seq)) {
        throw std::invalid_argument(
            "index: sequence is not minimal (a proper subsequence sums to zero)");
    }
    IndexResult res = index_of(seq);
    if (format == "json") {
        std::string out = "{\"seq\":\"" + seq.to_string() + "\",\"index\":" +
                          std::to_string(res.value) + ",\"argmin\":[";
        for (size_t i = 0; i < res.argmin.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(res.argmin[i]);
        }
        out += "]";
        if (verbose) {
            out += ",\"norms\":[";
            auto profile = norm_profile(seq);
            for (size_t i = 0; i < profile.size(); ++i) {
                if (i) out.push_back(',');
                out += "[" + std::to_string(profile[i].first) + "," +
                       std::to_string(profile[i].second / seq.modulus()) + "]";
            }
            out += "]";
        }
        out += "}";
        std::cout << out << "\n";
    } else {
        std::cout << "ind=" << res.value << "\n";
        if (verbose) {
            std::cout << "argmin=";
            for (size_t i = 0; i < res.argmin.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << res.argmin[i];
            }
            std::cout << "\n";
            for (const auto& [g, num] : norm_profile(seq)) {
                std::cout << "g=" << g << " norm=" << num / seq.modulus() << "\n";
            }
        }
    }
    return 0;
}

int run_dedekind(const std::string& kind, long long h, long long k, bool paper_literal) {
    Rational v(0);
    if (kind == "s") {
        v = paper_literal ? s_paper_literal(h, k) : s_fast(h, k);
    } else {
        if (paper_literal) {
            throw std::invalid_argument(
                "dedekind: --paper-literal only applies to --kind s; t always uses the "
                "literal convention");
        }
        v = t_mobius(h, k);
    }
    std::cout << v.to_string() << "\n";
    return 0;
}

int run_verify(long long n_min, long long n_max, bool all_moduli, int workers,
               const std::optional<std::string>& out_path, bool progress) {
    bool counterexample = false;
    auto note_progress = [&](const VerifyReport& r) {
        if (progress) {
            std::fprintf(stderr, "n=%lld total_minimal=%lld index2=%lld %lldms\n", r.n,
                         r.total_minimal, r.index2_count, r.elapsed_ms);
        }
        if (r.status == VerifyStatus::COUNTEREXAMPLE_FOUND) counterexample = true;
    };
    if (out_path) {
        JsonlVerifyWriter writer(*out_path);
        counterexample = writer.saw_counterexample();
        long long start = n_min;
        if (writer.resume_after()) start = std::max(start, *writer.resume_after() + 1);
        if (start <= n_max) {
            verify_range(start, n_max, !all_moduli, workers, [&](const VerifyReport& r) {
                writer.write(r);
                note_progress(r);
            });
        }
        counterexample = counterexample || writer.saw_counterexample();
    } else {
        verify_range(n_min, n_max, !all_moduli, workers, [&](const VerifyReport& r) {
            std::string line = to_jsonl(r);
            line.push_back('\n');
            if (std::fwrite(line.data(), 1, line.size(), stdout) != line.size() ||
                std::fflush(stdout) != 0) {
                throw std::runtime_error("write failed on stdout");
            }
            note_progress(r);
        });
    }
    return counterexample ? 2 : 0;
}

int run_collisions(long long k, const std::string& kind_name, int workers) {
    SumKind kind = kind_name == "s" ? SumKind::S : SumKind::T;
    CollisionTable table = collision_classes(k, kind, workers);
    std::cout << collision_csv(table);
    if (kind == SumKind::S && is_prime(k)) {
        bool ok = classes_are_inverse_pairs(table);
        std::cout << "# prime k=" << k << ": all classes are {h, h^-1}: " << (ok ? "OK" : "FAIL")
                  << "\n";
        if (!ok) return 1;
    }
    return 0;
}

int run_theorem(const std::string& seq_text, const std::optional<std::string>& order_text,
                const std::string& format) {
    ZsSeq seq = ZsSeq::parse(seq_text);
    if (seq.length() != 4) throw std::invalid_argument("theorem: expected \"n:x1,x2,x3,x4\"");
    LabeledSeq ls = labeled(seq);
    if (order_text) {
        std::array<int, 4> order{};
        if (std::sscanf(order_text->c_str(), "%d,%d,%d,%d", &order[0], &order[1], &order[2],
                        &order[3]) != 4) {
            throw std::invalid_argument("theorem: --order expects four comma-separated positions");
        }
        ls = relabel(ls, order);
    }
    for (long long xi : ls.x) {
        if (gcd_ll(xi, ls.n) != 1) {
            throw std::invalid_argument(
                "theorem: coordinate " + std::to_string(xi) + " shares a factor with n=" +
                std::to_string(ls.n) +
                "; the t-pairings need unit coordinates (a smallest index-2 example would "
                "have them)");
        }
    }
    TheoremCheck chk = check_t_equalities(ls);
    if (format == "json") {
        std::string out = "{\"seq\":\"" + seq.to_string() + "\",\"labels\":[";
        for (int i = 0; i < 4; ++i) {
            if (i) out.push_back(',');
            out += std::to_string(ls.x[i]);
        }
        out += "],\"w\":" + std::to_string(chk.w_value);
        out += ",\"nc_lhs\":" + std::to_string(chk.nc_lhs);
        out += ",\"nc_rhs\":" + std::to_string(chk.nc_rhs);
        out += ",\"nc_equal\":";
        out += chk.nc_equal ? "true" : "false";
        out += ",\"pairings\":[";
        for (size_t i = 0; i < chk.pairings.size(); ++i) {
            const TPairing& p = chk.pairings[i];
            if (i) out.push_back(',');
            out += "{\"split\":\"" + std::to_string(p.a) + std::to_string(p.b) + "|" +
                   std::to_string(p.c) + std::to_string(p.d) + "\",\"t_left\":\"" +
                   p.t_left.to_string() + "\",\"t_right\":\"" + p.t_right.to_string() +
                   "\",\"equal\":" + (p.equal ? "true" : "false") + "}";
        }
        out += "]}";
        std::cout << out << "\n";
    } else {
        std::cout << "seq=" << seq.to_string() << "\n";
        std::cout << "labels: x1=" << ls.x[0] << " x2=" << ls.x[1] << " x3=" << ls.x[2]
                  << " x4=" << ls.x[3] << "\n";
        std::cout << "W=" << chk.w_value << "\n";
        std::cout << "nc_lhs=" << chk.nc_lhs << " nc_rhs=" << chk.nc_rhs
                  << " nc_equal=" << (chk.nc_equal ? "true" : "false") << "\n";
        for (const TPairing& p : chk.pairings) {
            std::cout << "pairing {" << p.a << p.b << "|" << p.c << p.d << "}: t(" << p.left_arg
                      << "," << ls.n << ")=" << p.t_left.to_string() << " t(" << p.right_arg
                      << "," << ls.n << ")=" << p.t_right.to_string()
                      << " equal=" << (p.equal ? "true" : "false") << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"index of zero-sum sequences over Z/n and Dedekind-type sums"};
    app.require_subcommand(1);

    std::string seq_text, format = "plain", kind, order_buf;
    std::optional<std::string> order_text, out_path;
    bool verbose = false, paper_literal = false, all_moduli = false, progress = false;
    long long h = 0, k = 0, n_min = 0, n_max = 0;
    int workers = 0;

    CLI::App* c_index = app.add_subcommand("index", "index of a minimal zero-sum sequence");
    c_index->add_option("--seq", seq_text, "sequence as n:x1,x2,x3,x4")->required();
    c_index->add_option("--format", format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
    c_index->add_flag("--verbose", verbose, "also print every generator's norm");

    CLI::App* c_ded = app.add_subcommand("dedekind", "Dedekind sum s(h,k) or t(h,k)");
    c_ded->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
    c_ded->add_option("--kind", kind, "s or t")->required()->check(CLI::IsMember({"s", "t"}));
    c_ded->add_option("--h", h, "numerator parameter")->required();
    c_ded->add_option("--k", k, "modulus parameter")->required();
    c_ded->add_flag("--paper-literal", paper_literal,
                    "include the r=k term in s (shifts the value by -1/2)");

    CLI::App* c_verify = app.add_subcommand("verify", "exhaustive index check over a range");
    c_verify->add_option("--min", n_min, "first modulus")->required();
    c_verify->add_option("--max", n_max, "last modulus")->required();
    c_verify->add_flag("--all-moduli", all_moduli, "also check n with gcd(n,6) > 1");
    c_verify->add_option("--workers", workers, "worker threads (default: all cores)");
    c_verify->add_option("--out", out_path,
                         "append JSONL here (with checkpointed resume) instead of stdout");
    c_verify->add_flag("--progress", progress, "per-modulus progress on stderr");

    CLI::App* c_coll = app.add_subcommand("collisions", "group units by equal sum value");
    c_coll->add_option("--k", k, "modulus parameter")->required();
    c_coll->add_option("--kind", kind, "s or t")->required()->check(CLI::IsMember({"s", "t"}));
    c_coll->add_option("--workers", workers, "worker threads (default: all cores)");

    CLI::App* c_thm = app.add_subcommand("theorem", "W sum, necessary condition, t-pairings");
    c_thm->add_option("--seq", seq_text, "sequence as n:x1,x2,x3,x4")->required();
    c_thm->add_option("--order", order_buf,
                      "label positions into the sorted sequence, e.g. 4,3,2,1");
    c_thm->add_option("--format", format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    if (!order_buf.empty()) order_text = order_buf;

    try {
        if (app.got_subcommand(c_index)) return run_index(seq_text, format, verbose);
        if (app.got_subcommand(c_ded)) return run_dedekind(kind, h, k, paper_literal);
        if (app.got_subcommand(c_verify))
            return run_verify(n_min, n_max, all_moduli, workers, out_path, progress);
        if (app.got_subcommand(c_coll)) return run_collisions(k, kind, workers);
        if (app.got_subcommand(c_thm)) return run_theorem(seq_text, order_text, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
