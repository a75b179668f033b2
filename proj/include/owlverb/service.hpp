// JSON-over-HTTP facade of a Session. Request handling is independent of the
// transport so it can be exercised without sockets.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "owlverb/session.hpp"

namespace owlverb {

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> params;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// Routes:
///   POST /ontology     body: .omn text, or {"source": ..., "lexicon": ...}
///   GET  /diagram
///   GET  /verbalize    element=ID [scope=direct|referencing|inferred] [direct_reading=true]
///   GET  /dictionary
///   GET  /lexicon
///   PUT  /lexicon      body: .lex text
/// Errors are {"error": message, "diagnostics": [...]} with 400 (bad request),
/// 404 (unknown element or route), 409 (nothing loaded) or 422 (rejected input).
HttpResponse handle_request(Session& session, const HttpRequest& request);

std::string sentences_json(const std::vector<Sentence>& sentences);
std::string summary_json(const LoadSummary& summary);
std::string dictionary_json(const std::vector<DictionarySection>& sections);
std::string lexicon_json(const Lexicon& lex);

class HttpService {
 public:
  explicit HttpService(Session& session);
  ~HttpService();

  /// Binds to `port` (0 picks a free one) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called.
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace owlverb
