#!/usr/bin/env python3
"""Matrix shape descriptors"""
from pydantic import BaseModel, ConfigDict, Field


class MatrixShape(BaseModel):
    """Row and column count of an m x k matrix"""

    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=0)
    k: int = Field(ge=0)

    @property
    def bits(self) -> int:
        return self.m * self.k


class BlockAngularShape(BaseModel):
    """Dimensions of a block angular matrix

    A is a x a', B is b x b', and the bottom band (C D) is c x (a' + b').
    """

    model_config = ConfigDict(frozen=True)

    a: int = Field(ge=0)
    a_prime: int = Field(ge=0)
    b: int = Field(ge=0)
    b_prime: int = Field(ge=0)
    c: int = Field(ge=0)

    @property
    def cols(self) -> int:
        return self.a_prime + self.b_prime

    @property
    def rows(self) -> int:
        return self.a + self.b + self.c

    @property
    def free_bits(self) -> int:
        """Entries not forced to zero by the block structure"""
        return self.a * self.a_prime + self.b * self.b_prime + self.c * self.cols
