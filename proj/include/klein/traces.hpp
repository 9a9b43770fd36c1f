#pragma once

// Trace files on disk and the per-class bounds verified from them.

#include <filesystem>
#include <memory>
#include <vector>

#include "klein/casebound.hpp"

namespace klein::casebound {

struct TraceFile {
  std::filesystem::path path;
  Trace trace;
  Monomial lead;
};

/// Parses one trace file; the `lm` header is required. Throws ParseError
/// naming the file.
TraceFile load_trace(const std::filesystem::path& path, const AffineSetup& setup);
/// Every *.trace file in `dir`, sorted by file name. Throws ParseError.
std::vector<TraceFile> load_trace_dir(const std::filesystem::path& dir, const AffineSetup& setup);

/// A verified class. Leaves refer to the context's parameter ring, so the
/// context is kept alongside.
struct VerifiedClass {
  std::shared_ptr<const CaseContext> context;
  BoundReport report;
};

/// Verifies each trace against its class, `jobs` at a time; results come back
/// in input order. The first failure (in input order) is rethrown with the
/// file name prepended.
std::vector<VerifiedClass> verify_traces(const AffineSetup& setup, const std::vector<TraceFile>& files,
                                       unsigned jobs = 1);

}  // namespace klein::casebound
