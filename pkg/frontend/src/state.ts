import {
  ApiError,
  Client,
  CurveImage,
  InitSpec,
  LegalMoves,
  Move,
  SessionState,
} from "./types.js";

export type ClickResult = "lowered" | "raised" | "inert";

/** Explorer session state: a server-confirmed height plus a local move log
 * that always mirrors the server history. The explorer never computes image
 * values itself; every displayed value arrives from the client. */
export class Explorer {
  private constructor(
    readonly client: Client,
    public state: SessionState,
    public legal: LegalMoves,
  ) {}

  /** Per-curve image deltas of the last accepted move; empty before any. */
  public lastDeltas: number[] = [];

  /** Set when a server response violates the one-generator step law; the UI
   * renders this as an error state rather than trusting the panel. */
  public stepError = false;

  static async start(
    client: Client,
    n = 5,
    init: InitSpec = "fully_extended",
  ): Promise<Explorer> {
    const state = await client.createSession(n, init);
    const legal = await client.legalMoves(state.id);
    return new Explorer(client, state, legal);
  }

  get log(): Move[] {
    return this.state.history;
  }

  imageValues(): CurveImage[] {
    return this.state.image?.curves ?? [];
  }

  /** Apply a vertex click: lower if legal, otherwise raise if legal,
   * otherwise inert. State changes only on server confirmation. */
  async click(vertex: number): Promise<ClickResult> {
    let op: Move["op"];
    if (this.legal.lower.includes(vertex)) op = "lower";
    else if (this.legal.raise.includes(vertex)) op = "raise";
    else return "inert";
    await this.apply(op, vertex);
    return op === "lower" ? "lowered" : "raised";
  }

  /** Undo the last move by asking the server for the opposite move. */
  async undo(): Promise<void> {
    const last = this.log[this.log.length - 1];
    if (!last) return;
    const op = last.op === "lower" ? "raise" : "lower";
    const state = await this.client.move(this.state.id, op, last.vertex);
    // collapse the move + countermove pair so the log stays replayable
    state.history = this.log.slice(0, -1);
    this.state = state;
    this.legal = await this.client.legalMoves(state.id);
    this.lastDeltas = [];
  }

  /** Send one move to the server and adopt its confirmed state. */
  async apply(op: Move["op"], vertex: number): Promise<void> {
    const before = this.imageValues();
    const state = await this.client.move(this.state.id, op, vertex);
    this.state = state;
    this.legal = await this.client.legalMoves(state.id);
    const after = this.imageValues();
    this.lastDeltas = after.map((c, i) => c.a - (before[i]?.a ?? 0));
    if (before.length > 0 && this.lastDeltas.some((d) => Math.abs(d) !== 1)) {
      this.stepError = true;
    }
  }

  exportLog(): string {
    return JSON.stringify(
      { n: this.state.n, init: "fully_extended", moves: this.log },
      null,
      2,
    );
  }
}

export interface MoveLog {
  n: number;
  init: InitSpec;
  moves: Move[];
}

/** Parse and validate an exported move log; throws on corrupt input. */
export function validateLog(text: string): MoveLog {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch {
    throw new Error("move log is not valid JSON");
  }
  const log = data as Partial<MoveLog>;
  if (
    typeof log.n !== "number" ||
    log.init === undefined ||
    !Array.isArray(log.moves) ||
    log.moves.some(
      (m) =>
        (m.op !== "lower" && m.op !== "raise") ||
        !Number.isInteger(m.vertex) ||
        m.vertex < 0 ||
        m.vertex >= 1 << (log.n as number),
    )
  ) {
    throw new Error("move log failed validation");
  }
  return log as MoveLog;
}

/** Replay a validated move log through the API into a fresh session. */
export async function replay(client: Client, log: MoveLog): Promise<Explorer> {
  const explorer = await Explorer.start(client, log.n, log.init);
  for (const move of log.moves) {
    try {
      await explorer.apply(move.op, move.vertex);
    } catch (err) {
      if (err instanceof ApiError) {
        throw new Error(
          `replay rejected at ${move.op} ${move.vertex}: ${err.message}`,
        );
      }
      throw err;
    }
  }
  return explorer;
}
