#pragma once

#include <string>
#include <vector>

#include "prismforge/search.hpp"

namespace prismforge {

inline constexpr const char* kToolVersion = "0.1.0";

/// One self-describing record per line; rationals serialize as "p/q",
/// integers as bare digits, keys in a fixed (alphabetical) order.
std::string record_to_line(const SearchRecord& record,
                           const SearchBounds& bounds);
SearchRecord record_from_line(const std::string& line);

/// Appends records to a newline-delimited file (created if missing).
void append_records(const std::string& path,
                    const std::vector<SearchRecord>& records,
                    const SearchBounds& bounds);
std::vector<SearchRecord> load_records(const std::string& path);

struct FsckResult {
    std::size_t total = 0;
    std::size_t bad = 0;
    std::vector<std::string> errors;  // one message per bad record
};

/// Reloads every record and recomputes its report via classify; mismatches
/// (square flags, counts, perfection, measure) are reported.
FsckResult fsck_records(const std::string& path);

std::string checkpoint_to_json(const Checkpoint& cp);
Checkpoint checkpoint_from_json(const std::string& text);

/// Atomic write: temp file in the same directory, then rename.
void save_checkpoint(const std::string& path, const Checkpoint& cp);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace prismforge
