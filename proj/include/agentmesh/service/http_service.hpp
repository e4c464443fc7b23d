#pragma once

#include <atomic>
#include <fstream>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "agentmesh/demo/host.hpp"
#include "agentmesh/service/config.hpp"

namespace httplib {
class Server;
}

namespace agentmesh::service {

// HTTP facade over a demo::Runtime.  Every route is a thin adapter: the
// request body is decoded, handed to the same in-process objects the library
// API exposes (AgentHost, Toolbox, Registry, TaskStore), and the result is
// re-encoded in canonical form.  Because no behaviour lives here, a message
// delivered over HTTP and one delivered in-process take the same code path.
class HttpService {
public:
    explicit HttpService(ServiceConfig config);
    ~HttpService();

    HttpService(const HttpService&) = delete;
    HttpService& operator=(const HttpService&) = delete;

    // Binds the configured address and starts serving on a background
    // thread.  Returns the bound port (useful when the config asks for
    // port 0, i.e. "any free port").  Throws ConfigError if the address
    // cannot be bound.
    int start();

    // Stops the listener and joins the server thread.  Safe to call twice.
    void stop();

    bool running() const { return running_.load(); }
    int port() const { return port_; }
    const ServiceConfig& config() const { return config_; }

    // The runtime is exposed so tests can drive the same instance both
    // in-process and over HTTP and compare the results.
    demo::Runtime& runtime() { return *runtime_; }

private:
    void install_routes();
    void write_log_line(const std::string& line);

    ServiceConfig config_;
    std::unique_ptr<demo::Runtime> runtime_;
    std::unique_ptr<httplib::Server> server_;
    std::thread serve_thread_;
    std::atomic<bool> running_{false};
    int port_ = 0;
    std::ofstream log_stream_;
    std::mutex log_mutex_;
};

// Maps a protocol error code to the HTTP status the service responds with.
// Codes that indicate a malformed request map to 400, missing resources to
// 404, state conflicts to 409, and downstream execution failures to 502.
int http_status_for_code(const std::string& code);

}  // namespace agentmesh::service
