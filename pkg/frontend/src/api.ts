// Typed client for the study service HTTP API.

export interface BlockCondition {
  direction: string;
  interval: number;
}

export interface CreateSessionRequest {
  conditions: Record<string, BlockCondition>;
  seed: number;
  subject_tag?: string | null;
}

export interface BlockSummary {
  kind: string;
  direction: string;
  interval: number;
  size: number;
  allowed_labels: string[];
}

export interface SessionCreated {
  session_id: string;
  total: number;
  blocks: BlockSummary[];
}

export interface BlockInfo {
  kind: string;
  index: number;
  position: number;
  size: number;
  direction: string;
  interval: number;
}

export interface StimulusDescriptor {
  done: false;
  stimulus_id: string;
  image_url: string;
  index: number;
  total: number;
  allowed_labels: string[];
  block: BlockInfo;
}

export interface SessionDone {
  done: true;
  answered: number;
  total: number;
}

export type NextResponse = StimulusDescriptor | SessionDone;

export interface ResponseAck {
  accepted: boolean;
  answered: number;
  total: number;
}

export interface BlockResult {
  kind: string;
  direction: string;
  interval: number;
  correct: number;
  total: number;
  accuracy: number;
}

export interface SessionResults {
  session_id: string;
  partial: boolean;
  answered?: number;
  total?: number;
  blocks?: BlockResult[];
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = await response.json();
      detail = body.error ?? JSON.stringify(body);
    } catch {
      // keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return response.json() as Promise<T>;
}

export class StudyClient {
  constructor(private readonly baseUrl: string = "") {}

  async createSession(request: CreateSessionRequest): Promise<SessionCreated> {
    const response = await fetch(`${this.baseUrl}/sessions`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    return asJson<SessionCreated>(response);
  }

  // Idempotent: always returns the cursor stimulus, safe to re-fetch after
  // a network failure.
  async next(sessionId: string): Promise<NextResponse> {
    const response = await fetch(`${this.baseUrl}/sessions/${sessionId}/next`);
    return asJson<NextResponse>(response);
  }

  async respond(sessionId: string, stimulusId: string, label: string): Promise<ResponseAck> {
    const response = await fetch(`${this.baseUrl}/sessions/${sessionId}/responses`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ stimulus_id: stimulusId, label }),
    });
    return asJson<ResponseAck>(response);
  }

  async results(sessionId: string): Promise<SessionResults> {
    const response = await fetch(`${this.baseUrl}/sessions/${sessionId}/results`);
    return asJson<SessionResults>(response);
  }

  imageUrl(descriptor: StimulusDescriptor): string {
    return `${this.baseUrl}${descriptor.image_url}`;
  }
}
