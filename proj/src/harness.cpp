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

#include "iclq/harness.hpp"

#include <algorithm>
#include <string>

#include "iclq/error.hpp"

namespace iclq {

std::string_view to_string(PartyName name) { return name == PartyName::Alice ? "alice" : "bob"; }

Party::Party(PartyName name, std::vector<std::size_t> held) : name_(name), held_(std::move(held)) {}

bool Party::holds(std::size_t qubit) const {
    return std::find(held_.begin(), held_.end(), qubit) != held_.end();
}

void Party::advance(PartyPhase next) {
    if (next < phase_) {
        throw ValidationError(std::string(to_string(name_)) + " cannot move back to an earlier phase");
    }
    phase_ = next;
}

void Party::hand_over(std::size_t qubit, Party& to) {
    auto it = std::find(held_.begin(), held_.end(), qubit);
    if (it == held_.end()) {
        throw ValidationError(std::string(to_string(name_)) + " does not hold qubit " +
                              std::to_string(qubit));
    }
    held_.erase(it);
    to.held_.push_back(qubit);
}

Message2 ClassicalChannel::recv() {
    if (queue_.empty()) {
        throw WouldBlockError("receive on an empty classical channel");
    }
    Message2 head = queue_.front();
    queue_.pop_front();
    return head;
}

}  // namespace iclq
