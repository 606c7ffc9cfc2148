#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "headliner/config.hpp"

namespace httplib {
class Server;
}

namespace headliner {

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Request handlers over immutable resources. Every method is const and
// safe to call from concurrent request threads.
class Service {
 public:
  Service(Config config, Resources resources);

  HttpResponse analyze(std::string_view request_body) const;
  // Summaries of the feed directory, newest file first.
  HttpResponse feed() const;
  HttpResponse feed_item(std::string_view id) const;
  HttpResponse config() const;
  HttpResponse health() const;

  void mount(httplib::Server& server) const;

  const Config& settings() const { return config_; }

 private:
  Config config_;
  Resources resources_;
};

std::string error_body(std::string_view code, std::string_view message);

// Owns an httplib server bound to one port.
class HttpServer {
 public:
  explicit HttpServer(const Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 picks a free port. Returns the bound port; throws IoError when
  // the address cannot be bound.
  int bind(const std::string& host, int port);
  // Blocks until stop() is called.
  void listen();
  void stop();

 private:
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace headliner
