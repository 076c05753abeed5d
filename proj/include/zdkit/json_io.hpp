#pragma once

#include <string>

#include "zdkit/emanation.hpp"
#include "zdkit/fano.hpp"
#include "zdkit/spandrel.hpp"
#include "zdkit/twist_brocade.hpp"
#include "zdkit/zd_boxkite.hpp"

namespace zdkit {

/// Stable-key JSON serialisations used by the CLI and the golden tests.
std::string trips_json(const std::vector<Trip>& trips);
std::string trips_csv(const std::vector<Trip>& trips);
std::string assessors_csv(const std::vector<Assessor>& as);
std::string assessors_json(const std::vector<Assessor>& as);
std::string boxkite_json(const BoxKite& bk);
std::string boxkites_json(const std::vector<BoxKite>& ks);
std::string spandrel_json(const Spandrel& sp);
std::string egg_json(const EggOctet& egg, const EggReport& rep);
std::string twist_json(const TwistResult& t, int n);
std::string royal_hunt_json(const RoyalHunt& rh);
std::string fano_json(const FanoPresentation& p);
std::string brocade_json(const Brocade& b);

}  // namespace zdkit
