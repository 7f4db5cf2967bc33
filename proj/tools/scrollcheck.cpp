#include <atomic>
#include <csignal>
#include <iostream>
#include <string>
#include <vector>

#include "scrolls/commands.hpp"

namespace {

std::atomic<bool> g_cancel{false};

extern "C" void on_interrupt(int) { g_cancel.store(true); }

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_interrupt);
    std::signal(SIGTERM, on_interrupt);
    std::vector<std::string> args(argv + 1, argv + argc);
    return scrolls::run_cli(args, std::cout, std::cerr, &g_cancel);
}
