"""Chat conversation substrate: messages, tool-call requests, and tool schemas."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

ROLES = ("system", "user", "assistant", "tool")


@dataclass
class ToolCallRequest:
    """A single tool invocation requested by the model."""

    id: str
    tool_name: str
    arguments: dict

    def __post_init__(self):
        if not self.tool_name:
            raise ValueError("tool_name must be nonempty")
        if not isinstance(self.arguments, dict):
            raise ValueError("arguments must be a mapping")

    def to_dict(self) -> dict:
        return {"id": self.id, "tool_name": self.tool_name, "arguments": self.arguments}

    @classmethod
    def from_dict(cls, data: dict) -> "ToolCallRequest":
        return cls(id=data["id"], tool_name=data["tool_name"], arguments=dict(data["arguments"]))


@dataclass
class ChatMessage:
    """One turn of a chat conversation.

    Only assistant messages may carry tool_calls; only tool messages carry a
    tool_call_id (referencing the assistant call they answer).
    """

    role: str
    content: str = ""
    tool_calls: list[ToolCallRequest] = field(default_factory=list)
    tool_call_id: str | None = None

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"unknown role {self.role!r}")
        if self.role != "assistant" and self.tool_calls:
            raise ValueError("only assistant messages may carry tool_calls")
        if self.role == "tool" and not self.tool_call_id:
            raise ValueError("tool messages require a tool_call_id")
        if self.role != "tool" and self.tool_call_id is not None:
            raise ValueError("tool_call_id is only valid on tool messages")
        ids = [c.id for c in self.tool_calls]
        if len(ids) != len(set(ids)):
            raise ValueError("tool_call ids must be unique within a message")

    def to_dict(self) -> dict:
        data: dict = {"role": self.role, "content": self.content}
        if self.tool_calls:
            data["tool_calls"] = [c.to_dict() for c in self.tool_calls]
        if self.tool_call_id is not None:
            data["tool_call_id"] = self.tool_call_id
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "ChatMessage":
        return cls(
            role=data["role"],
            content=data.get("content", "") or "",
            tool_calls=[ToolCallRequest.from_dict(c) for c in data.get("tool_calls", [])],
            tool_call_id=data.get("tool_call_id"),
        )


@dataclass
class ToolSpec:
    """Declared schema of a tool exposed to the model."""

    name: str
    description: str
    parameters: dict

    def __post_init__(self):
        if not self.name:
            raise ValueError("tool name must be nonempty")


def system(content: str) -> ChatMessage:
    return ChatMessage(role="system", content=content)


def user(content: str) -> ChatMessage:
    return ChatMessage(role="user", content=content)


def assistant(content: str = "", tool_calls: list[ToolCallRequest] | None = None) -> ChatMessage:
    return ChatMessage(role="assistant", content=content, tool_calls=list(tool_calls or []))


def tool_reply(tool_call_id: str, content: str) -> ChatMessage:
    return ChatMessage(role="tool", content=content, tool_call_id=tool_call_id)


def message_to_wire(msg: ChatMessage) -> dict:
    """Convert a message to the chat-completions wire shape."""
    data: dict = {"role": msg.role, "content": msg.content}
    if msg.role == "assistant" and msg.tool_calls:
        data["tool_calls"] = [
            {
                "id": c.id,
                "type": "function",
                "function": {"name": c.tool_name, "arguments": json.dumps(c.arguments)},
            }
            for c in msg.tool_calls
        ]
    if msg.role == "tool":
        data["tool_call_id"] = msg.tool_call_id
    return data


def toolspec_to_wire(spec: ToolSpec) -> dict:
    return {
        "type": "function",
        "function": {
            "name": spec.name,
            "description": spec.description,
            "parameters": spec.parameters,
        },
    }


def render_conversation(messages: list[ChatMessage]) -> str:
    """Flatten a conversation to plain text for summarizer prompts."""
    lines = []
    for msg in messages:
        body = msg.content
        if msg.tool_calls:
            calls = ", ".join(f"{c.tool_name}({json.dumps(c.arguments)})" for c in msg.tool_calls)
            body = (body + "\n" if body else "") + f"[tool calls: {calls}]"
        lines.append(f"{msg.role}: {body}")
    return "\n\n".join(lines)
