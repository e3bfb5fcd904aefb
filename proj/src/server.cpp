#include <httplib.h>

#include "aggression/errors.hpp"
#include "aggression/service.hpp"
#include "json_util.hpp"

namespace aggression {

namespace {

void send(httplib::Response& res, int status, const codec::json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& rule, const std::string& message) {
  send(res, status, codec::json{{"error", rule}, {"message", message}});
}

template <class F>
void handle(httplib::Response& res, F&& f) {
  try {
    f();
  } catch (const ServiceError& e) {
    send_error(res, e.status(), e.rule(), e.what());
  } catch (const ParseError& e) {
    send_error(res, 422, "malformed-body", e.what());
  } catch (const std::exception& e) {
    send_error(res, 500, "internal-error", e.what());
  }
}

nlohmann::json body_of(const httplib::Request& req) {
  try {
    return detail::parse_json(req.body);
  } catch (const ParseError& e) {
    throw ServiceError(422, "malformed-body", e.what());
  }
}

}  // namespace

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(GameService& service) : impl_(std::make_unique<Impl>()) {
  auto& srv = impl_->server;
  GameService& svc = service;
  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Headers", "Content-Type"},
                           {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"}});
  srv.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  srv.Post("/v1/games", [&svc](const httplib::Request& req, httplib::Response& res) {
    handle(res, [&] { send(res, 201, svc.create(body_of(req))); });
  });
  srv.Get("/v1/games/:id", [&svc](const httplib::Request& req, httplib::Response& res) {
    handle(res, [&] { send(res, 200, svc.get(req.path_params.at("id"))); });
  });
  srv.Post("/v1/games/:id/moves", [&svc](const httplib::Request& req, httplib::Response& res) {
    handle(res, [&] {
      const auto id = req.path_params.at("id");
      svc.get(id);  // 404 before looking at the body
      send(res, 200, svc.move(id, body_of(req)));
    });
  });
  srv.Get("/v1/games/:id/hint", [&svc](const httplib::Request& req, httplib::Response& res) {
    handle(res, [&] { send(res, 200, svc.hint(req.path_params.at("id"))); });
  });
  srv.Delete("/v1/games/:id", [&svc](const httplib::Request& req, httplib::Response& res) {
    handle(res, [&] {
      svc.remove(req.path_params.at("id"));
      res.status = 204;
    });
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  int bound = port;
  if (port == 0) bound = impl_->server.bind_to_any_port(host);
  else if (!impl_->server.bind_to_port(host, port)) bound = -1;
  if (bound < 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace aggression
