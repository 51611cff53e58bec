#include "osn/gateway/http_server.hpp"

#include <httplib.h>

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "osn/common/text.hpp"

namespace osn::gateway {

HttpServer::HttpServer(Gateway& gateway, std::size_t threads)
    : gateway_(gateway), server_(std::make_unique<httplib::Server>()) {
  const std::size_t n = threads ? threads : std::max<std::size_t>(16, std::thread::hardware_concurrency());
  server_->new_task_queue = [n] { return new httplib::ThreadPool(n); };

  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    ApiRequest api;
    api.method = req.method;
    api.path = req.path;
    for (const auto& [k, v] : req.params) api.params.emplace(k, v);
    for (const auto& [k, v] : req.headers) api.headers.emplace(text::to_lower_ascii(k), v);
    api.remote_addr = req.remote_addr;

    ApiResponse out = gateway_.handle(api);
    res.status = out.status;
    for (const auto& [k, v] : out.headers) res.set_header(k, v);
    res.set_header("Cache-Control", "no-store");
    res.set_content(out.body, out.content_type);
  };
  const std::string any = ".*";
  server_->Get(any, handler);
  server_->Post(any, handler);
  server_->Put(any, handler);
  server_->Patch(any, handler);
  server_->Delete(any, handler);
  server_->Options(any, handler);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::listen() { server_->listen_after_bind(); }

void HttpServer::stop() {
  if (server_) server_->stop();
}

bool HttpServer::running() const { return server_->is_running(); }

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

}  // namespace osn::gateway
