#pragma once

#include <memory>
#include <string>

#include "osn/gateway/api.hpp"

namespace httplib {
class Server;
}

namespace osn::gateway {

/// cpp-httplib adapter: every request, on any method or path, goes through
/// Gateway::handle().
class HttpServer {
 public:
  explicit HttpServer(Gateway& gateway, std::size_t threads = 0);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Returns the bound port; pass 0 for an ephemeral one. Throws on failure.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  void listen();
  void stop();
  bool running() const;
  void wait_until_ready() const;

 private:
  Gateway& gateway_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace osn::gateway
