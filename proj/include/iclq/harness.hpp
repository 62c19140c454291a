// Copyright 2026 The iclq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <string_view>
#include <vector>

#include "iclq/bell.hpp"

namespace iclq {

enum class PartyName : std::uint8_t { Alice, Bob };

std::string_view to_string(PartyName name);

/// Turn-based script position. Phases only move forward.
enum class PartyPhase : std::uint8_t { Idle, HoldingResource, Acting, Sent, Received, Done };

/**
 * One side of a two-party protocol: the qubit indices it currently holds
 * and its script phase. Qubits move between parties with hand_over(), so
 * each index is held by exactly one party at a time.
 */
class Party {
   public:
    Party(PartyName name, std::vector<std::size_t> held);

    PartyName name() const { return name_; }
    const std::vector<std::size_t>& held() const { return held_; }
    bool holds(std::size_t qubit) const;
    PartyPhase phase() const { return phase_; }

    /// Throws ValidationError on a backwards move.
    void advance(PartyPhase next);

    /// Moves `qubit` to `to`. Throws ValidationError if not held here.
    void hand_over(std::size_t qubit, Party& to);

   private:
    PartyName name_;
    std::vector<std::size_t> held_;
    PartyPhase phase_ = PartyPhase::Idle;
};

/// Alice → Bob classical link: FIFO, lossless, exactly-once.
class ClassicalChannel {
   public:
    void send(Message2 bits) {
        queue_.push_back(bits);
        ++sent_;
    }

    /// Throws WouldBlockError when empty; the in-process protocols are
    /// turn-based so an empty receive is a script bug.
    Message2 recv();

    std::size_t size() const { return queue_.size(); }
    bool empty() const { return queue_.empty(); }

    std::size_t total_sent() const { return sent_; }

   private:
    std::deque<Message2> queue_;
    std::size_t sent_ = 0;
};

}  // namespace iclq
