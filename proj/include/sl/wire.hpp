#pragma once

#include <string>

#include "sl/ledger.hpp"

// File IO for the CLI: parameter, key, user, ledger and transaction files.

namespace sl::wire {

Bytes read_file(const std::string& path);           // throws std::runtime_error when missing
void write_file(const std::string& path, std::span<const std::uint8_t> data);

void save_params(const PublicParams& pp, const std::string& path);
PublicParams load_params(const std::string& path);

void save_management_keys(const ledger::ManagementKeys& keys, const std::string& path);
ledger::ManagementKeys load_management_keys(const std::string& path);

void save_public_keys(const ledger::PublicKeys& keys, const std::string& path);
ledger::PublicKeys load_public_keys(const std::string& path);

void save_user(const ledger::UserSecret& user, const std::string& path);
ledger::UserSecret load_user(const std::string& path);

void save_ledger(const ledger::LedgerState& state, const std::string& path);
ledger::LedgerState load_ledger(const std::string& path);

void save_tx(const ledger::Transaction& tx, const std::string& path);
ledger::Transaction load_tx(const std::string& path);

} // namespace sl::wire
