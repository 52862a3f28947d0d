#pragma once

// JSON-lines oracle files. Each line is {"request": ..., "response": ...}
// with both sides in the io formats. A replayed oracle answers a request by
// exact lookup of its serialized form; a request with no recorded answer is
// a protocol violation.

#include "convdual/io.hpp"
#include "convdual/reconstruct.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace convdual {

class ProtocolError : public Error {
 public:
  using Error::Error;
};

class OracleTranscript {
 public:
  static OracleTranscript load(const std::string& path);

  // Throws ProtocolError when the request was never recorded.
  const Json& answer(const Json& request) const;
  // Dimension of the first request (its "n" or "dim" field).
  int dim() const { return dim_; }
  std::size_t size() const { return answers_.size(); }

 private:
  std::map<std::string, Json> answers_;
  int dim_ = 0;
};

// Appends request/response lines, skipping repeated requests.
class OracleRecorder {
 public:
  explicit OracleRecorder(std::string path);
  void record(const Json& request, const Json& response);
  void flush() const;

 private:
  std::string path_;
  std::vector<std::string> lines_;
  std::map<std::string, bool> seen_;
  mutable std::mutex mu_;
};

FunctionOracle replay_function_oracle(std::shared_ptr<const OracleTranscript> t, ConeTag tag);
SetOracle replay_set_oracle(std::shared_ptr<const OracleTranscript> t);
SubspaceOracle replay_subspace_oracle(std::shared_ptr<const OracleTranscript> t);

FunctionOracle recording(const FunctionOracle& o, std::shared_ptr<OracleRecorder> rec);
SetOracle recording(const SetOracle& o, std::shared_ptr<OracleRecorder> rec);
SubspaceOracle recording(const SubspaceOracle& o, std::shared_ptr<OracleRecorder> rec);

}  // namespace convdual
