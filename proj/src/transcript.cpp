#include "dcnet/transcript.hpp"

#include <sstream>

namespace dcnet {

Transcript::Transcript(int n, Recording mode) : n_(n), mode_(mode) {
  bits_sent_.assign(static_cast<size_t>(n) + 1, 0);
  if (mode_ == Recording::View) view_buffer_.reserve(256);
}

void Transcript::set_observers(std::vector<uint8_t> observers) {
  observers_ = std::move(observers);
}

void Transcript::account(ParticipantId from, size_t bits) {
  bits_sent_[static_cast<size_t>(from)] += bits;
}

uint64_t Transcript::total_bits() const {
  uint64_t t = 0;
  for (uint64_t b : bits_sent_) t += b;
  return t;
}

void Transcript::render_view_event(std::string& out, uint32_t round, EventKind kind,
                                   ParticipantId from, ParticipantId to, bool refused,
                                   const uint8_t* bits, size_t nbits) {
  out.push_back(static_cast<char>(kind));
  out.push_back(static_cast<char>(round & 0xFF));
  out.push_back(static_cast<char>((round >> 8) & 0xFF));
  out.push_back(static_cast<char>(from));
  out.push_back(static_cast<char>(to));
  out.push_back(refused ? 1 : 0);
  for (size_t i = 0; i < nbits; ++i) out.push_back(static_cast<char>(bits[i] + '0'));
  out.push_back('\x7F');
}

void Transcript::append_view(EventKind kind, ParticipantId from, ParticipantId to, bool refused,
                             const BitString& payload) {
  bool visible = kind != EventKind::Private || observes(from) || observes(to);
  if (!visible) return;
  render_view_event(view_buffer_, round_, kind, from, to, refused, payload.data(), payload.size());
}

void Transcript::append_view_bit(EventKind kind, ParticipantId from, ParticipantId to,
                                 bool refused, uint8_t bit, bool has_payload) {
  bool visible = kind != EventKind::Private || observes(from) || observes(to);
  if (!visible) return;
  render_view_event(view_buffer_, round_, kind, from, to, refused, &bit, has_payload ? 1 : 0);
}

void Transcript::record_private(ParticipantId from, ParticipantId to, const BitString& payload) {
  account(from, payload.size());
  if (mode_ == Recording::Full) {
    events_.push_back({round_, EventKind::Private, from, to, false, payload});
  } else if (mode_ == Recording::View) {
    append_view(EventKind::Private, from, to, false, payload);
  }
}

void Transcript::record_private_bit(ParticipantId from, ParticipantId to, uint8_t bit) {
  account(from, 1);
  if (mode_ == Recording::Full) {
    events_.push_back({round_, EventKind::Private, from, to, false, BitString{bit}});
  } else if (mode_ == Recording::View) {
    append_view_bit(EventKind::Private, from, to, false, bit, true);
  }
}

void Transcript::record_broadcast_bit(ParticipantId from, uint8_t bit, bool refused) {
  account(from, refused ? 0 : 1);
  if (mode_ == Recording::Full) {
    events_.push_back({round_, EventKind::Broadcast, from, 0, refused,
                       refused ? BitString{} : BitString{bit}});
  } else if (mode_ == Recording::View) {
    append_view_bit(EventKind::Broadcast, from, 0, refused, bit, !refused);
  }
}

void Transcript::record_broadcast(ParticipantId from, const BitString& payload, bool refused) {
  account(from, refused ? 0 : payload.size());
  if (mode_ == Recording::Full) {
    events_.push_back({round_, EventKind::Broadcast, from, 0, refused,
                       refused ? BitString{} : payload});
  } else if (mode_ == Recording::View) {
    append_view(EventKind::Broadcast, from, 0, refused, refused ? BitString{} : payload);
  }
}

void Transcript::record_sim_reveal(ParticipantId from, const BitString& payload, bool missing) {
  account(from, missing ? 0 : payload.size());
  if (mode_ == Recording::Full) {
    events_.push_back({round_, EventKind::SimReveal, from, 0, missing,
                       missing ? BitString{} : payload});
  } else if (mode_ == Recording::View) {
    append_view(EventKind::SimReveal, from, 0, missing, missing ? BitString{} : payload);
  }
}

std::string Transcript::serialize() const {
  std::ostringstream os;
  for (const Event& e : events_) {
    os << 'r' << e.round << ' ';
    switch (e.kind) {
      case EventKind::Private: os << 'P'; break;
      case EventKind::Broadcast: os << 'B'; break;
      case EventKind::SimReveal: os << 'S'; break;
    }
    os << ' ' << e.sender << "->";
    if (e.receiver == 0) os << '*';
    else os << e.receiver;
    if (e.refused) os << " refused";
    else os << ' ' << bits_to_chars(e.payload);
    os << '\n';
  }
  return os.str();
}

std::string Transcript::view_for(const std::vector<ParticipantId>& observer_ids) const {
  std::vector<uint8_t> flags(bits_sent_.size(), 0);
  for (ParticipantId id : observer_ids)
    flags.at(static_cast<size_t>(id)) = 1;
  std::string out;
  for (const Event& e : events_) {
    bool visible = e.kind != EventKind::Private ||
                   flags[static_cast<size_t>(e.sender)] != 0 ||
                   flags[static_cast<size_t>(e.receiver)] != 0;
    if (!visible) continue;
    render_view_event(out, e.round, e.kind, e.sender, e.receiver, e.refused,
                      e.payload.data(), e.payload.size());
  }
  return out;
}

}  // namespace dcnet
