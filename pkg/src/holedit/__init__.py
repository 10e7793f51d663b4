"""A structure editor calculus for a typed lambda calculus with holes:
bidirectional statics, one-cursor edit states, a deterministic action
semantics, metatheory fuzzers, surface syntax, and an HTTP edit-session
service with a CLI front end."""

__all__ = ["lang", "zipper", "actions", "metatheory", "textio", "server", "cli"]
