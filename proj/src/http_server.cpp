#include <httplib.h>

#include "owlverb/service.hpp"

namespace owlverb {

struct HttpService::Impl {
  Session& session;
  httplib::Server server;

  explicit Impl(Session& s) : session(s) {
    auto forward = [this](const httplib::Request& req, httplib::Response& res) {
      HttpRequest r{req.method, req.path, {}, req.body};
      for (const auto& [k, v] : req.params) r.params.emplace(k, v);
      HttpResponse out = handle_request(session, r);
      res.status = out.status;
      res.set_content(out.body, out.content_type);
    };
    for (const char* path : {"/ontology", "/diagram", "/verbalize", "/dictionary", "/lexicon"}) {
      server.Get(path, forward);
      server.Post(path, forward);
      server.Put(path, forward);
    }
  }
};

HttpService::HttpService(Session& session) : impl_(std::make_unique<Impl>(session)) {}
HttpService::~HttpService() = default;

int HttpService::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpService::listen() { return impl_->server.listen_after_bind(); }

void HttpService::stop() { impl_->server.stop(); }

}  // namespace owlverb
