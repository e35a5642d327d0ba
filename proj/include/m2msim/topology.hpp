// Cell snapshots: base station at the cell center, machines placed
// uniformly at random and split into sources and relays.
#pragma once

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "m2msim/channel.hpp"
#include "m2msim/rng.hpp"

namespace m2msim::topology {

enum class Role { Source, Relay };

struct Position {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

struct Machine {
    int id = 0;
    Position position;
    Role role = Role::Source;
};

struct CellConfig {
    double width_m = 500.0;
    double height_m = 500.0;
    int n_sources = 0;
    int n_relays = 0;
    double requested_bw_hz = 200e3;
    std::vector<channel::RfInterfaceSpec> m2m_interfaces;
    channel::RfInterfaceSpec m2b_interface;
    int bs_max_channels = 128;
};

// One immutable time snapshot of the cell. Machines with id < n_sources are
// sources; relay r is machine id n_sources + r.
struct CellSnapshot {
    double width_m = 0.0;
    double height_m = 0.0;
    Position bs_position;
    std::vector<Machine> machines;
    int n_sources = 0;
    int n_relays = 0;
    double requested_bw_hz = 0.0;
    std::vector<channel::RfInterfaceSpec> m2m_interfaces;
    channel::RfInterfaceSpec m2b_interface;
    int bs_max_channels = 128;

    const Machine& source(int s) const { return machines[s]; }
    const Machine& relay(int r) const { return machines[n_sources + r]; }

    void validate() const {
        if (static_cast<int>(machines.size()) != n_sources + n_relays) {
            throw std::invalid_argument("CellSnapshot: machine count != n_sources + n_relays");
        }
        if (requested_bw_hz <= 0) {
            throw std::invalid_argument("CellSnapshot: requested bandwidth must be > 0");
        }
    }
};

// Positions are i.i.d. uniform over the rectangle; the first n_sources ids
// are sources (positions are exchangeable, so the split by index loses no
// generality). Deterministic given the stream state.
inline CellSnapshot generate_snapshot(const CellConfig& config, RandomStream& rng) {
    if (config.n_sources < 0 || config.n_relays < 0) {
        throw std::invalid_argument("generate_snapshot: counts must be >= 0");
    }
    if (config.width_m <= 0 || config.height_m <= 0) {
        throw std::invalid_argument("generate_snapshot: cell dimensions must be > 0");
    }
    CellSnapshot snap;
    snap.width_m = config.width_m;
    snap.height_m = config.height_m;
    snap.bs_position = {config.width_m / 2.0, config.height_m / 2.0};
    snap.n_sources = config.n_sources;
    snap.n_relays = config.n_relays;
    snap.requested_bw_hz = config.requested_bw_hz;
    snap.m2m_interfaces = config.m2m_interfaces;
    snap.m2b_interface = config.m2b_interface;
    snap.bs_max_channels = config.bs_max_channels;

    const int n = config.n_sources + config.n_relays;
    snap.machines.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double x = rng.uniform(0.0, config.width_m);
        const double y = rng.uniform(0.0, config.height_m);
        snap.machines.push_back(
            Machine{i, {x, y}, i < config.n_sources ? Role::Source : Role::Relay});
    }
    return snap;
}

// Snapshot text format:
//   width height bs_x bs_y rbw_hz
//   id role x y          (role is S or R, one machine per line)
inline void write_snapshot(std::ostream& out, const CellSnapshot& snap) {
    out << snap.width_m << ' ' << snap.height_m << ' ' << snap.bs_position.x << ' '
        << snap.bs_position.y << ' ' << snap.requested_bw_hz << '\n';
    for (const auto& m : snap.machines) {
        out << m.id << ' ' << (m.role == Role::Source ? 'S' : 'R') << ' ' << m.position.x
            << ' ' << m.position.y << '\n';
    }
}

// Parses the snapshot body; interface specs are not part of the file and
// must be supplied by the caller. Errors name the offending line.
inline CellSnapshot read_snapshot(std::istream& in,
                                  const std::vector<channel::RfInterfaceSpec>& m2m,
                                  const channel::RfInterfaceSpec& m2b, int bs_max_channels) {
    CellSnapshot snap;
    snap.m2m_interfaces = m2m;
    snap.m2b_interface = m2b;
    snap.bs_max_channels = bs_max_channels;

    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("snapshot line " + std::to_string(line_no) + ": " + what);
    };

    if (!std::getline(in, line)) {
        line_no = 1;
        fail("missing header");
    }
    ++line_no;
    {
        std::istringstream hs(line);
        if (!(hs >> snap.width_m >> snap.height_m >> snap.bs_position.x >> snap.bs_position.y >>
              snap.requested_bw_hz)) {
            fail("expected 'width height bs_x bs_y rbw_hz'");
        }
        if (snap.width_m <= 0 || snap.height_m <= 0 || snap.requested_bw_hz <= 0) {
            fail("dimensions and requested bandwidth must be > 0");
        }
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        Machine m;
        char role = 0;
        if (!(ls >> m.id >> role >> m.position.x >> m.position.y)) {
            fail("expected 'id role x y'");
        }
        if (role == 'S') {
            m.role = Role::Source;
        } else if (role == 'R') {
            m.role = Role::Relay;
        } else {
            fail(std::string("unknown role '") + role + "' (expected S or R)");
        }
        if (m.id != static_cast<int>(snap.machines.size())) fail("machine ids must be dense");
        if (m.role == Role::Relay) {
            ++snap.n_relays;
        } else {
            if (snap.n_relays > 0) fail("sources must precede relays");
            ++snap.n_sources;
        }
        snap.machines.push_back(m);
    }
    return snap;
}

}  // namespace m2msim::topology
