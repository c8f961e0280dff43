//! The discrete action space shared by the simulator, dataset, metrics, and
//! trainer.

use serde::{Deserialize, Serialize};

/// Agent action. `MoveForward` advances ~0.25 m, the turns rotate ~30 deg,
/// `Stop` terminates the episode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Action {
    MoveForward,
    TurnLeft,
    TurnRight,
    Stop,
}

impl Action {
    /// The three movement actions, in canonical order.
    pub const MOVEMENT: [Action; 3] = [Action::MoveForward, Action::TurnLeft, Action::TurnRight];

    pub fn is_movement(&self) -> bool {
        *self != Action::Stop
    }

    pub fn name(&self) -> &'static str {
        match self {
            Action::MoveForward => "move_forward",
            Action::TurnLeft => "turn_left",
            Action::TurnRight => "turn_right",
            Action::Stop => "stop",
        }
    }

    /// Index into per-movement-action tables; `None` for `Stop`.
    pub fn movement_index(&self) -> Option<usize> {
        match self {
            Action::MoveForward => Some(0),
            Action::TurnLeft => Some(1),
            Action::TurnRight => Some(2),
            Action::Stop => None,
        }
    }

    /// The action whose nominal motion is the inverse, where one exists.
    pub fn mirrored(&self) -> Option<Action> {
        match self {
            Action::TurnLeft => Some(Action::TurnRight),
            Action::TurnRight => Some(Action::TurnLeft),
            _ => None,
        }
    }
}

impl std::str::FromStr for Action {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "move_forward" => Ok(Action::MoveForward),
            "turn_left" => Ok(Action::TurnLeft),
            "turn_right" => Ok(Action::TurnRight),
            "stop" => Ok(Action::Stop),
            other => Err(format!("unknown action: {other}")),
        }
    }
}

impl std::fmt::Display for Action {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
