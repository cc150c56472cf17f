class EmptyTest {
}
