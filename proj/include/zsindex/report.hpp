#pragma once

#include <cstdio>
#include <optional>
#include <string>

#include "zsindex/dedekind.hpp"
#include "zsindex/verify.hpp"

namespace zsindex {

std::string seq_string(long long n, const std::array<long long, 4>& x);

// One JSON object, fields in fixed order:
//   n, total_minimal, index2_count, index2_witnesses, theorem_checks,
//   elapsed_ms, status
// elapsed_ms is emitted as 0 so that reruns and different worker counts
// produce byte-identical files; measured times are reported separately.
// No trailing newline.
std::string to_jsonl(const VerifyReport& r);

// CSV with header "k,kind,class_index,value,member", one row per member;
// classes ordered by smallest member, members ascending.
std::string collision_csv(const CollisionTable& t);

std::optional<long long> read_checkpoint(const std::string& path);
void write_checkpoint(const std::string& path, long long n);

// Append-only JSONL sink with a sidecar checkpoint recording the largest
// fully written modulus. Reopening the same path resumes after the
// checkpoint; a fresh path (or a path with no checkpoint) starts over.
// Each report is written as one full line and flushed before the
// checkpoint advances.
class JsonlVerifyWriter {
public:
    explicit JsonlVerifyWriter(std::string path);
    ~JsonlVerifyWriter();
    JsonlVerifyWriter(const JsonlVerifyWriter&) = delete;
    JsonlVerifyWriter& operator=(const JsonlVerifyWriter&) = delete;

    // largest modulus already in the file, if resuming
    std::optional<long long> resume_after() const { return resume_after_; }
    bool saw_counterexample() const { return saw_counterexample_; }

    void write(const VerifyReport& r);

    static std::string checkpoint_path(const std::string& out_path);

private:
    std::string path_;
    std::FILE* file_ = nullptr;
    std::optional<long long> resume_after_;
    bool saw_counterexample_ = false;
};

}  // namespace zsindex
