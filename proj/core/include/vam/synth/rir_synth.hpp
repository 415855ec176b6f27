#pragma once

#include "vam/dsp/rir.hpp"
#include "vam/synth/room.hpp"

namespace vam::synth {

// Direct impulse at distance/343 s plus an exponentially decaying Gaussian
// tail whose Schroeder RT60 matches the room's Sabine RT60; tail gain is
// budgeted so the measured DRR equals drr_for_distance(distance).
dsp::Rir synth_rir(const RoomSpec& spec, Rng& rng);

}  // namespace vam::synth
