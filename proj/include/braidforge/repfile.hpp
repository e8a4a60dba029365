#pragma once

#include <map>
#include <optional>
#include <string>

#include "braidforge/hermitian.hpp"
#include "braidforge/reps.hpp"

namespace braidforge {

// On-disk representation container. Complex entries are two-element
// arrays [re, im]; matrices are row-major nested arrays; floating values
// are emitted with 17 significant digits so parse(emit(x)) is
// bit-identical. Matrix maps are keyed by name ("x1", "s2", "m_0_3").
struct RepFile {
    enum class Kind { Semidirect, PureAnti };

    std::string schema_version = "1.0";
    Kind kind = Kind::Semidirect;
    int n = 0;
    index_t N = 0;
    long k = 1;
    bool anti = true; // pure_anti only
    std::map<std::string, CMatrix> g; // semidirect free images (may be empty for braid-only files)
    std::map<std::string, CMatrix> s; // semidirect braid images
    std::map<std::string, CMatrix> M; // pure_anti generator images
    std::optional<CMatrix> H;
    std::map<std::string, std::string> metadata;
};

RepFile load_repfile(const std::string& path);           // throws parse_error
std::string emit_repfile(const RepFile& file);           // deterministic text
void save_repfile(const RepFile& file, const std::string& path);

// Conversions to and from the in-memory types (throw validation_error on
// files that do not satisfy the type invariants).
SemidirectRep to_semidirect(const RepFile& file);
PureBraidAntiRep to_pure_anti(const RepFile& file);
RepFile from_semidirect(const SemidirectRep& rep,
                        std::map<std::string, std::string> metadata = {});
RepFile from_pure_anti(const PureBraidAntiRep& rep,
                       std::map<std::string, std::string> metadata = {});

// Key helpers ("x3", "s1", "m_0_2").
std::string free_key(int j);
std::string braid_key(int i);
std::string pure_key(int i, int j);

// JSON text for a SignatureReport (fields p, q, z, steps[], fallback_used,
// oracle), deterministic.
std::string signature_report_json(const SignatureReport& report);

} // namespace braidforge
