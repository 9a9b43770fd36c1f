#include "klein/traces.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

namespace klein::casebound {

TraceFile load_trace(const std::filesystem::path& path, const AffineSetup& setup) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot read");
  std::stringstream text;
  text << in.rdbuf();
  try {
    Trace trace = parse_trace(text.str());
    if (!trace.lead) throw Error(ErrorCode::ParseError, "missing `lm` header");
    Monomial lead = poly::parse_monomial(*trace.lead, setup.arity());
    return {path, std::move(trace), lead};
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

std::vector<TraceFile> load_trace_dir(const std::filesystem::path& dir, const AffineSetup& setup) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::ParseError, dir.string() + ": not a directory");
  }
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".trace") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<TraceFile> files;
  for (const auto& p : paths) files.push_back(load_trace(p, setup));
  return files;
}

std::vector<VerifiedClass> verify_traces(const AffineSetup& setup, const std::vector<TraceFile>& files,
                                         unsigned jobs) {
  std::vector<VerifiedClass> reports(files.size());
  std::vector<std::exception_ptr> errors(files.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) {
      try {
        auto ctx = std::make_shared<const CaseContext>(setup, files[i].lead);
        reports[i] = {ctx, verify_trace(*ctx, files[i].trace)};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      throw Error(e.code(), files[i].path.filename().string() + ": " + e.detail());
    }
  }
  return reports;
}

}  // namespace klein::casebound
