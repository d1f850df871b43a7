#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qca/json_io.hpp"
#include "qca/uq.hpp"

namespace httplib {
class Server;
}

namespace qca {

class UnknownSession : public Error {
public:
    explicit UnknownSession(const std::string& what) : Error("UnknownSession", what) {}
};

// One exploration: a base seed, a mutation history, and pinned items that are
// always shown in the current chart.
class Session {
public:
    Session(std::string id, const json& request);

    json state() const;
    json mutate(const std::string& vertex);
    json undo();
    json pin_element(const std::string& name, const json& body);
    json pin_point(const std::string& name, const json& coords);
    json verify() const;
    // replayable document: base request, history, pins
    json snapshot() const;

    std::mutex& lock() { return mu_; }

private:
    std::string id_;
    json request_;
    SeedPtr base_;
    std::optional<KappaContext> ctx_;
    std::vector<std::string> history_;
    IceQuiver current_;
    std::vector<std::pair<std::string, json>> pins_;  // name, body as given
    std::map<std::string, TorusElement> elements_;
    std::map<std::string, std::vector<long long>> points_;
    std::mutex mu_;
};

class SessionStore {
public:
    json create(const json& request);
    json list() const;
    std::shared_ptr<Session> get(const std::string& id) const;
    void remove(const std::string& id);

private:
    mutable std::mutex mu_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    long next_ = 1;
};

void configure_routes(httplib::Server& svr, SessionStore& store);
int http_status(const Error& e);
// default port from QCA_PORT, else 8765
int default_port();
void serve(const std::string& host, int port);

}  // namespace qca
