#include "convdual/oracle_protocol.hpp"

#include <fstream>

namespace convdual {

namespace {

std::string key(const Json& j) { return j.dump(); }

}  // namespace

OracleTranscript OracleTranscript::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open oracle file '" + path + "'");
  OracleTranscript t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Json j = parse_json(line, path + ":" + std::to_string(lineno));
    if (!j.is_object() || !j.contains("request") || !j.contains("response")) {
      throw ProtocolError(path + ":" + std::to_string(lineno) + ": expected {\"request\", \"response\"}");
    }
    const Json& req = j["request"];
    if (t.answers_.empty()) {
      if (req.contains("n")) t.dim_ = req["n"].get<int>();
      else if (req.contains("dim")) t.dim_ = req["dim"].get<int>();
    }
    t.answers_[key(req)] = j["response"];
  }
  if (t.answers_.empty()) throw ProtocolError("oracle file '" + path + "' has no entries");
  return t;
}

const Json& OracleTranscript::answer(const Json& request) const {
  const auto it = answers_.find(key(request));
  if (it == answers_.end()) throw ProtocolError("oracle file has no response for request " + key(request).substr(0, 200));
  return it->second;
}

OracleRecorder::OracleRecorder(std::string path) : path_(std::move(path)) {}

void OracleRecorder::record(const Json& request, const Json& response) {
  const std::lock_guard<std::mutex> lock(mu_);
  const std::string k = key(request);
  if (seen_[k]) return;
  seen_[k] = true;
  lines_.push_back(Json{{"request", request}, {"response", response}}.dump());
}

void OracleRecorder::flush() const {
  const std::lock_guard<std::mutex> lock(mu_);
  std::ofstream out(path_);
  if (!out) throw InvalidArgument("cannot write oracle file '" + path_ + "'");
  for (const std::string& l : lines_) out << l << '\n';
}

FunctionOracle replay_function_oracle(std::shared_ptr<const OracleTranscript> t, ConeTag tag) {
  const int n = t->dim();
  return {tag, n, [t](const PLConvexFunction& f) { return function_from_json(t->answer(to_json(f))); }};
}

SetOracle replay_set_oracle(std::shared_ptr<const OracleTranscript> t) {
  const int n = t->dim();
  return {n, [t](const Polyhedron& c) { return polyhedron_from_json(t->answer(to_json(c, false))); }};
}

SubspaceOracle replay_subspace_oracle(std::shared_ptr<const OracleTranscript> t) {
  const int n = t->dim();
  return {n, [t](const Subspace& s) { return subspace_from_json(t->answer(to_json(s))); }};
}

FunctionOracle recording(const FunctionOracle& o, std::shared_ptr<OracleRecorder> rec) {
  return {o.tag, o.n, [o, rec](const PLConvexFunction& f) {
            PLConvexFunction out = o.call(f);
            rec->record(to_json(f), to_json(out));
            return out;
          }};
}

SetOracle recording(const SetOracle& o, std::shared_ptr<OracleRecorder> rec) {
  return {o.n, [o, rec](const Polyhedron& c) {
            Polyhedron out = o.call(c);
            rec->record(to_json(c, false), to_json(out, false));
            return out;
          }};
}

SubspaceOracle recording(const SubspaceOracle& o, std::shared_ptr<OracleRecorder> rec) {
  return {o.n, [o, rec](const Subspace& s) {
            Subspace out = o.call(s);
            rec->record(to_json(s), to_json(out));
            return out;
          }};
}

}  // namespace convdual
