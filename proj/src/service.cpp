#include "headliner/service.hpp"

#include <httplib.h>

#include <algorithm>
#include <json.hpp>
#include <system_error>
#include <vector>

#include "headliner/text.hpp"

namespace headliner {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::size_t kPreviewBytes = 200;

// Cuts at a UTF-8 character boundary.
std::string preview(std::string_view body) {
  if (body.size() <= kPreviewBytes) return std::string(body);
  std::size_t cut = kPreviewBytes;
  while (cut > 0 && (static_cast<unsigned char>(body[cut]) & 0xC0) == 0x80) --cut;
  return std::string(body.substr(0, cut)) + "...";
}

HttpResponse json_response(int status, const json& j) {
  return {status, j.dump() + "\n", "application/json"};
}

struct FeedEntry {
  Article article;
  fs::file_time_type mtime;
};

// Throws IoError when the directory cannot be read. Files that are not
// valid articles are skipped.
std::vector<FeedEntry> read_feed(const fs::path& dir) {
  std::error_code ec;
  if (dir.empty() || !fs::is_directory(dir, ec)) {
    throw IoError("feed directory unavailable: " + dir.string());
  }
  std::vector<FeedEntry> out;
  fs::directory_iterator it(dir, ec);
  if (ec) throw IoError("cannot read feed directory: " + dir.string());
  for (const auto& entry : it) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    try {
      out.push_back({load_article(entry.path()), entry.last_write_time()});
    } catch (const std::exception&) {
      continue;
    }
  }
  std::sort(out.begin(), out.end(), [](const FeedEntry& a, const FeedEntry& b) {
    if (a.mtime != b.mtime) return a.mtime > b.mtime;
    return a.article.id < b.article.id;
  });
  return out;
}

}  // namespace

std::string error_body(std::string_view code, std::string_view message) {
  return json{{"code", code}, {"message", message}}.dump() + "\n";
}

Service::Service(Config config, Resources resources)
    : config_(std::move(config)), resources_(std::move(resources)) {
  config_.analysis.ranking.validate();
  config_.analysis.thresholds.validate();
}

HttpResponse Service::analyze(std::string_view request_body) const {
  try {
    auto request = parse_analyze_request(request_body);
    auto response = headliner::analyze(request, resources_, config_.analysis);
    return {200, response_body(response), "application/json"};
  } catch (const RequestError& e) {
    int status = e.code() == "empty_body" ? 422 : 400;
    return {status, error_body(e.code(), e.what()), "application/json"};
  } catch (const std::exception& e) {
    return {500, error_body("internal_error", e.what()), "application/json"};
  }
}

HttpResponse Service::feed() const {
  try {
    json list = json::array();
    for (const auto& e : read_feed(config_.paths.feed_dir)) {
      const auto& a = e.article;
      list.push_back({{"id", a.id},
                      {"headline", a.headline},
                      {"source", a.source ? json(*a.source) : json(nullptr)},
                      {"preview", preview(a.body)}});
    }
    return json_response(200, list);
  } catch (const std::exception& e) {
    return {500, error_body("feed_unavailable", e.what()), "application/json"};
  }
}

HttpResponse Service::feed_item(std::string_view id) const {
  try {
    for (const auto& e : read_feed(config_.paths.feed_dir)) {
      if (e.article.id == id) return {200, article_to_json(e.article), "application/json"};
    }
    return {404, error_body("not_found", "no article with id '" + std::string(id) + "'"),
            "application/json"};
  } catch (const std::exception& e) {
    return {500, error_body("feed_unavailable", e.what()), "application/json"};
  }
}

HttpResponse Service::config() const {
  const auto& a = config_.analysis;
  return json_response(200, {{"lambda", a.ranking.lambda},
                             {"beta", a.ranking.beta},
                             {"top_k", a.ranking.top_k},
                             {"thresholds", {{"fb", a.thresholds.fb}, {"tw", a.thresholds.tw}}}});
}

HttpResponse Service::health() const { return {200, "ok\n", "text/plain"}; }

void Service::mount(httplib::Server& server) const {
  auto send = [](httplib::Response& res, const HttpResponse& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server.Post("/api/analyze", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, analyze(req.body));
  });
  server.Get("/api/feed", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, feed());
  });
  server.Get(R"(/api/feed/([^/]+))", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, feed_item(req.matches[1].str()));
  });
  server.Get("/api/config", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, config());
  });
  server.Get("/healthz", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, health());
  });
}

HttpServer::HttpServer(const Service& service) : server_(std::make_unique<httplib::Server>()) {
  // The library default adds SO_REUSEPORT, which would let a second server
  // share a busy port instead of failing to bind.
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  service.mount(*server_);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    int bound = server_->bind_to_any_port(host);
    if (bound < 0) throw IoError("cannot bind " + host);
    return bound;
  }
  if (!server_->bind_to_port(host, port)) {
    throw IoError("cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void HttpServer::listen() { server_->listen_after_bind(); }

void HttpServer::stop() {
  if (server_) server_->stop();
}

}  // namespace headliner
