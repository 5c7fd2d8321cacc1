#include "zsindex/report.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace zsindex {

std::string seq_string(long long n, const std::array<long long, 4>& x) {
    std::string out = std::to_string(n) + ":";
    for (int i = 0; i < 4; ++i) {
        if (i) out.push_back(',');
        out += std::to_string(x[i]);
    }
    return out;
}

namespace {

const char* json_bool(bool b) { return b ? "true" : "false"; }

void append_pairings(std::string& out, const std::vector<TPairing>& ps) {
    out += "[";
    for (size_t i = 0; i < ps.size(); ++i) {
        const TPairing& p = ps[i];
        if (i) out.push_back(',');
        out += "{\"split\":\"";
        out += std::to_string(p.a) + std::to_string(p.b) + "|" + std::to_string(p.c) +
               std::to_string(p.d);
        out += "\",\"t_left\":\"" + p.t_left.to_string();
        out += "\",\"t_right\":\"" + p.t_right.to_string();
        out += "\",\"equal\":";
        out += json_bool(p.equal);
        out += "}";
    }
    out += "]";
}

void append_witness_check(std::string& out, long long n, const WitnessCheck& wc) {
    out += "{\"seq\":\"" + seq_string(n, wc.x) + "\"";
    out += ",\"all_units\":";
    out += json_bool(wc.all_units);
    out += ",\"w\":" + std::to_string(wc.w_value);
    out += ",\"nc_form\":\"";
    out += wc.nc_is_reindexed ? "reindexed" : "product";
    out += "\",\"nc_lhs\":" + std::to_string(wc.nc_lhs);
    out += ",\"nc_rhs\":" + std::to_string(wc.nc_rhs);
    out += ",\"nc_equal\":";
    out += json_bool(wc.nc_equal);
    out += ",\"pairings\":";
    append_pairings(out, wc.pairings);
    out += ",\"gnorms\":[";
    for (size_t i = 0; i < wc.gnorms.size(); ++i) {
        if (i) out.push_back(',');
        out += "[" + std::to_string(wc.gnorms[i].first) + "," +
               std::to_string(wc.gnorms[i].second) + "]";
    }
    out += "]}";
}

}  // namespace

std::string to_jsonl(const VerifyReport& r) {
    std::string out = "{\"n\":" + std::to_string(r.n);
    out += ",\"total_minimal\":" + std::to_string(r.total_minimal);
    out += ",\"index2_count\":" + std::to_string(r.index2_count);
    out += ",\"index2_witnesses\":[";
    for (size_t i = 0; i < r.index2_witnesses.size(); ++i) {
        if (i) out.push_back(',');
        out += "\"" + seq_string(r.n, r.index2_witnesses[i]) + "\"";
    }
    out += "],\"theorem_checks\":[";
    for (size_t i = 0; i < r.theorem_checks.size(); ++i) {
        if (i) out.push_back(',');
        append_witness_check(out, r.n, r.theorem_checks[i]);
    }
    out += "],\"elapsed_ms\":0,\"status\":\"" + verify_status_name(r.status) + "\"}";
    return out;
}

std::string collision_csv(const CollisionTable& t) {
    std::string out = "k,kind,class_index,value,member\n";
    for (size_t c = 0; c < t.classes.size(); ++c) {
        for (long long m : t.classes[c].members) {
            out += std::to_string(t.k) + "," + sum_kind_name(t.kind) + "," + std::to_string(c) +
                   "," + t.classes[c].value.to_string() + "," + std::to_string(m) + "\n";
        }
    }
    return out;
}

std::optional<long long> read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    long long n = 0;
    if (!(in >> n)) return std::nullopt;
    return n;
}

void write_checkpoint(const std::string& path, long long n) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
        out << n << "\n";
        if (!out.flush()) throw std::runtime_error("cannot write checkpoint " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("cannot move checkpoint into place: " +
                                 std::string(std::strerror(errno)));
    }
}

std::string JsonlVerifyWriter::checkpoint_path(const std::string& out_path) {
    return out_path + ".ckpt";
}

JsonlVerifyWriter::JsonlVerifyWriter(std::string path) : path_(std::move(path)) {
    std::optional<long long> ckpt = read_checkpoint(checkpoint_path(path_));
    bool resume = false;
    if (ckpt) {
        std::ifstream in(path_, std::ios::binary);
        if (in) {
            resume = true;
            std::string line;
            while (std::getline(in, line)) {
                if (line.find("\"status\":\"COUNTEREXAMPLE_FOUND\"") != std::string::npos) {
                    saw_counterexample_ = true;
                }
            }
            // a resumable file must end on a line boundary
            in.clear();
            in.seekg(0, std::ios::end);
            if (in.tellg() > 0) {
                char last = '\0';
                in.seekg(-1, std::ios::end);
                in.get(last);
                if (last != '\n') {
                    throw std::runtime_error(path_ + ": truncated final line; remove the file and " +
                                             checkpoint_path(path_) + " to start over");
                }
            }
        }
    }
    if (resume) {
        resume_after_ = ckpt;
        file_ = std::fopen(path_.c_str(), "ab");
    } else {
        file_ = std::fopen(path_.c_str(), "wb");
    }
    if (!file_) throw std::runtime_error("cannot open output " + path_);
}

JsonlVerifyWriter::~JsonlVerifyWriter() {
    if (file_) std::fclose(file_);
}

void JsonlVerifyWriter::write(const VerifyReport& r) {
    std::string line = to_jsonl(r);
    line.push_back('\n');
    if (std::fwrite(line.data(), 1, line.size(), file_) != line.size() || std::fflush(file_) != 0) {
        throw std::runtime_error("write failed on " + path_);
    }
    write_checkpoint(checkpoint_path(path_), r.n);
    if (r.status == VerifyStatus::COUNTEREXAMPLE_FOUND) saw_counterexample_ = true;
}

}  // namespace zsindex
